#pragma once

#include <cstdint>
#include <random>

#include "lrc/fn_calculus.hpp"
#include "lrc/forms.hpp"

namespace lrc {

/// Reproducible generator: std::mt19937_64 with values reduced by modulo, so that the
/// stream of samples depends only on the seed and not on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi] up to modulo bias.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next() % span);
  }
  bool coin() { return (next() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// 1..max_terms monomials of total degree <= max_degree with integer coefficients in [-2, 2].
/// `vars` restricts which variables may appear (all when empty).
Polynomial random_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree = 2, int max_terms = 3,
                             const std::vector<std::size_t>& vars = {});
/// Nonzero polynomial of the same family.
Polynomial random_nonzero_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree = 2, int max_terms = 3,
                                     const std::vector<std::size_t>& vars = {});

/// Homogeneous form with r du-factors and s leaf factors; may be zero only when no monomial fits.
Form random_form(Rng& rng, const SplittingPtr& sp, int r, int s);
/// Random form of total degree `deg`, mixing the available bidegrees.
Form random_form_of_degree(Rng& rng, const SplittingPtr& sp, int deg);
/// Leafwise form (no du factors) of degree s.
Form random_leaf_form(Rng& rng, const SplittingPtr& sp, int s);
VectorField random_vector_field(Rng& rng, const SplittingPtr& sp);
/// General form-valued vector field of form degree `deg`.
FormVector random_form_vector(Rng& rng, const SplittingPtr& sp, int deg);
/// Element of leafwise forms (x) V-span with form degree s (shifted degree s - 1).
FormVector random_q_element(Rng& rng, const SplittingPtr& sp, int s);

}  // namespace lrc
