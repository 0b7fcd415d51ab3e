#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lrc {

using Rational = mpq_class;

/// Exponent multi-index, packed one byte per variable.
/// Variable 0 sits in the most significant byte so that integer comparison is lexicographic.
struct Monomial {
  static constexpr std::size_t kMaxVars = 8;

  std::uint64_t packed = 0;
  std::uint32_t degree = 0;

  static Monomial variable(std::size_t v, unsigned power = 1);

  unsigned exponent(std::size_t v) const {
    return static_cast<unsigned>((packed >> (8 * (kMaxVars - 1 - v))) & 0xffu);
  }
  Monomial times(const Monomial& o) const;
  Monomial lowered(std::size_t v) const;  // exponent of v reduced by one; caller checks > 0

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // graded lexicographic
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    return a.packed <=> b.packed;
  }
};

/// Multivariate polynomial over Q in a fixed number of variables.
/// Terms are kept sorted ascending in graded-lex order with no zero coefficients,
/// so structural equality is mathematical equality.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(std::size_t nvars = 0);
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t v);
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  unsigned total_degree() const;
  const std::vector<Term>& terms() const { return terms_; }
  // Coefficient of a monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_same_chart(const Polynomial& o) const;
  void add_scaled(const Polynomial& o, int sign);

  std::size_t nvars_;
  std::vector<Term> terms_;
};

Polynomial differentiate(const Polynomial& p, std::size_t var);
// Named-coordinate form; throws std::invalid_argument for an unknown name.
Polynomial differentiate(const Polynomial& p, const std::string& coord,
                         const std::vector<std::string>& coords);

/// Canonical text, readable back by parse_expression. Highest terms first.
std::string to_string(const Polynomial& p, const std::vector<std::string>& coords);
std::string to_string(const Rational& q);

}  // namespace lrc
