#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lrc/polynomial.hpp"

namespace lrc {

struct Chart {
  std::vector<std::string> leaf;        // x^1..x^n
  std::vector<std::string> transverse;  // u^1..u^p

  std::size_t n() const { return leaf.size(); }
  std::size_t p() const { return transverse.size(); }
  std::size_t m() const { return leaf.size() + transverse.size(); }
  /// Leaf names followed by transverse names; polynomial variable order.
  std::vector<std::string> coordinates() const;
  void validate() const;  // throws std::invalid_argument

  friend bool operator==(const Chart&, const Chart&) = default;
};

/// Generator bit g < n is d^C x^{g}; bit n + a is du^{a}.
using Mask = std::uint32_t;
using Components = std::map<Mask, Polynomial>;

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Transversal fields V_a = d/du^a + V_a^i d/dx^i.  Immutable once built; share through SplittingPtr.
class Splitting {
 public:
  /// v[a][i] = V_a^i.
  static std::shared_ptr<const Splitting> make(Chart chart, std::vector<std::vector<Polynomial>> v);
  static std::shared_ptr<const Splitting> flat(Chart chart);

  const Chart& chart() const { return chart_; }
  std::size_t n() const { return chart_.n(); }
  std::size_t p() const { return chart_.p(); }
  std::size_t m() const { return chart_.m(); }
  const Polynomial& v(std::size_t a, std::size_t i) const { return v_[a][i]; }
  const std::vector<std::vector<Polynomial>>& coefficients() const { return v_; }

  Polynomial zero() const { return Polynomial(m()); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(m(), c); }
  Polynomial coordinate(std::size_t c) const { return Polynomial::variable(m(), c); }

  /// e_b(f) for the adapted frame e = (d/dx^1..d/dx^n, V_1..V_p).
  Polynomial frame_derivative(std::size_t b, const Polynomial& f) const;
  /// d of the coframe monomial, in adapted components (cached at construction).
  const Components& d_monomial(Mask mask) const { return d_cache_.at(mask); }

  Mask leaf_mask() const { return (Mask{1} << n()) - 1; }
  Mask du_mask() const { return ((Mask{1} << m()) - 1) & ~leaf_mask(); }

  bool same_as(const Splitting& o) const { return chart_ == o.chart_ && v_ == o.v_; }

 private:
  Splitting(Chart chart, std::vector<std::vector<Polynomial>> v);
  Chart chart_;
  std::vector<std::vector<Polynomial>> v_;
  std::vector<Components> d_cache_;
};

using SplittingPtr = std::shared_ptr<const Splitting>;

void require_same(const SplittingPtr& a, const SplittingPtr& b, const char* where);

/// Sign of gen(a) ^ gen(b) relative to gen(a|b); 0 when they overlap.
int monomial_wedge_sign(Mask a, Mask b);
void accumulate_wedge(Components& out, const Components& a, const Components& b, const Rational& scale = 1);
void accumulate(Components& out, Mask mask, const Polynomial& p);

/// Element of Lambda(M) in the adapted coframe of its splitting.
class Form {
 public:
  Form() = default;
  explicit Form(SplittingPtr sp) : sp_(std::move(sp)) {}
  Form(SplittingPtr sp, Components comps);

  static Form function(SplittingPtr sp, const Polynomial& f);
  static Form constant(SplittingPtr sp, const Rational& c);
  /// d^C x^i for g < n, du^{g-n} otherwise.
  static Form generator(SplittingPtr sp, std::size_t g);
  static Form monomial(SplittingPtr sp, Mask mask, const Polynomial& coeff);

  const SplittingPtr& splitting() const { return sp_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  /// Form degree; nullopt for zero or inhomogeneous forms.
  std::optional<int> degree() const;
  std::set<int> degrees() const;
  Form part_of_degree(int deg) const;
  int max_du_count() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Rational& c);
  Form operator-() const;
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Rational& c) { return a *= c; }
  friend Form operator*(const Rational& c, Form a) { return a *= c; }
  friend Form operator*(const Polynomial& f, const Form& a);

  friend bool operator==(const Form& a, const Form& b);

 private:
  SplittingPtr sp_;
  Components comps_;
};

Form wedge(const Form& a, const Form& b);
Form exterior_d(const Form& a);
/// Part with r du-factors and s leaf factors; s < 0 keeps every leaf count.
Form bidegree_project(const Form& a, int r, int s = -1);

/// Vector field in coordinate components: coeff[c] multiplies d/d(coordinate c).
struct VectorField {
  SplittingPtr sp;
  std::vector<Polynomial> coeff;

  static VectorField zero(SplittingPtr sp);
  static VectorField coordinate(SplittingPtr sp, std::size_t c);
  /// V_a of the splitting.
  static VectorField transversal(SplittingPtr sp, std::size_t a);
  Polynomial apply(const Polynomial& f) const;
  /// Components in the adapted frame (d/dx^i, V_a).
  std::vector<Polynomial> adapted() const;
};

Form contract_vector(const VectorField& x, const Form& a);

/// Re-express the same differential form in the adapted coframe of another splitting.
Form reframe(const Form& a, const SplittingPtr& target);

/// Form literal: scalar expressions times wedge products of coordinate differentials dx, du.
Form parse_form(const std::string& text, const SplittingPtr& sp, int line = 1, int column = 1);

std::string to_string(const Form& a);
std::string generator_name(const Chart& chart, std::size_t g);

}  // namespace lrc
