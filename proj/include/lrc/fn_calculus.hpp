#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lrc/forms.hpp"

namespace lrc {

/// Form-valued vector field Z = sum_b comp[b] (x) e_b over the adapted frame
/// e = (d/dx^1..d/dx^n, V_1..V_p).  The adapted frame is dual to the adapted coframe,
/// so i_Z(generator b) = comp[b].
class FormVector {
 public:
  FormVector() = default;
  explicit FormVector(SplittingPtr sp);
  FormVector(SplittingPtr sp, std::vector<Form> comps);

  /// omega (x) X with X in coordinate components.
  static FormVector tensor(const Form& omega, const VectorField& x);
  /// omega (x) e_b with e_b an adapted frame vector.
  static FormVector frame(const Form& omega, std::size_t b);

  const SplittingPtr& splitting() const { return sp_; }
  const std::vector<Form>& components() const { return comps_; }
  const Form& component(std::size_t b) const { return comps_.at(b); }
  bool is_zero() const;
  std::optional<int> degree() const;  // form degree when homogeneous and nonzero
  std::set<int> degrees() const;
  FormVector part_of_degree(int deg) const;

  /// Z(f) = sum_b comp[b] e_b(f).
  Form apply(const Polynomial& f) const;

  FormVector& operator+=(const FormVector& o);
  FormVector& operator-=(const FormVector& o);
  FormVector& operator*=(const Rational& c);
  FormVector operator-() const;
  friend FormVector operator+(FormVector a, const FormVector& b) { return a += b; }
  friend FormVector operator-(FormVector a, const FormVector& b) { return a -= b; }
  friend FormVector operator*(FormVector a, const Rational& c) { return a *= c; }
  friend FormVector operator*(const Rational& c, FormVector a) { return a *= c; }
  friend bool operator==(const FormVector& a, const FormVector& b);

  /// omega ^ Z, acting on the form slot.
  friend FormVector wedge(const Form& omega, const FormVector& z);

 private:
  SplittingPtr sp_;
  std::vector<Form> comps_;
};

/// i_Z: the C-infinity-linear derivation of degree |Z|-1 with i_Z(df) = Z(f).
Form insertion(const FormVector& z, const Form& a);
FormVector insertion(const FormVector& z, const FormVector& y);
/// L_Z = i_Z d - (-1)^{|Z|-1} d i_Z.
Form lie_derivative(const FormVector& z, const Form& a);
FormVector nr_bracket(const FormVector& z1, const FormVector& z2);
/// Reconstructed from [L_{Z1}, L_{Z2}] on the coordinate functions.
FormVector fn_bracket(const FormVector& z1, const FormVector& z2);
/// Form-valued vector field with the given values on the coordinate functions.
FormVector from_coordinate_values(const SplittingPtr& sp, const std::vector<Form>& values);

/// Identity field P^C + P^V, with L_I = d.
FormVector identity_field(const SplittingPtr& sp);

std::string to_string(const FormVector& z);

struct IdentityResidual {
  std::string identity;
  std::size_t sample = 0;
  std::string residual;  // empty when zero
};

struct IdentityReport {
  std::vector<IdentityResidual> entries;
  bool all_zero() const;
};

class Rng;
/// The six product and commutator identities of the FN calculus on random homogeneous samples.
IdentityReport fn_identity_suite(const SplittingPtr& sp, Rng& rng, std::size_t samples);

}  // namespace lrc
