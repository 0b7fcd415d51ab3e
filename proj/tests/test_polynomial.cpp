#include <gtest/gtest.h>

#include "lrc/expression.hpp"
#include "lrc/polynomial.hpp"
#include "lrc/sampling.hpp"

using namespace lrc;

namespace {

const std::vector<std::string> kCoords{"x1", "u1"};

Polynomial P(const std::string& s) { return parse_expression(s, kCoords); }

}  // namespace

TEST(Polynomial, ZeroParsesToZero) { EXPECT_TRUE(P("0").is_zero()); }

TEST(Polynomial, DirectReading) {
  const Polynomial p = P("3/2*u1 + x1^2");
  ASSERT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(p.coefficient(Monomial::variable(0, 2)), Rational(1));
  EXPECT_EQ(p.coefficient(Monomial::variable(1, 1)), Rational(3, 2));
}

TEST(Polynomial, PowerMatchesRepeatedProduct) {
  const Polynomial s = P("x1 + u1");
  EXPECT_EQ(P("(x1+u1)^2"), s * s);
  EXPECT_EQ(P("(x1+u1)^2"), P("x1^2 + 2*x1*u1 + u1^2"));
  EXPECT_EQ(P("(x1+u1)^3"), s * s * s);
}

TEST(Polynomial, RationalsAreCanonical) {
  EXPECT_EQ(P("2/4*x1"), P("1/2*x1"));
  EXPECT_EQ(P("x1 - x1"), P("0"));
  Rational r(-6, 4);  // gmpxx leaves the two-argument constructor uncanonicalized
  r.canonicalize();
  EXPECT_EQ(r, Rational(-3, 2));
  EXPECT_EQ(Rational(1, 4) + Rational(1, 4), Rational(1, 2));
}

TEST(Polynomial, Differentiate) {
  EXPECT_EQ(differentiate(P("x1^2*u1"), "x1", kCoords), P("2*x1*u1"));
  EXPECT_TRUE(differentiate(P("x1"), "u1", kCoords).is_zero());
  EXPECT_THROW(differentiate(P("x1"), "y", kCoords), std::invalid_argument);
}

TEST(Polynomial, MixedPartialsCommute) {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const Polynomial p = random_polynomial(rng, 2, 3, 4);
    EXPECT_EQ(differentiate(differentiate(p, 0), 1), differentiate(differentiate(p, 1), 0));
  }
}

TEST(Polynomial, RingAxioms) {
  Rng rng(12);
  const Polynomial zero(2), one = Polynomial::constant(2, 1);
  for (int k = 0; k < 100; ++k) {
    const Polynomial p = random_polynomial(rng, 2), q = random_polynomial(rng, 2), r = random_polynomial(rng, 2);
    EXPECT_EQ(p + zero, p);
    EXPECT_EQ(p * one, p);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ((p + q) + r, p + (q + r));
  }
}

TEST(Polynomial, DifferentiateIsDerivation) {
  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const Polynomial p = random_polynomial(rng, 2), q = random_polynomial(rng, 2);
    for (std::size_t v = 0; v < 2; ++v)
      EXPECT_EQ(differentiate(p * q, v), differentiate(p, v) * q + p * differentiate(q, v));
  }
}

TEST(Polynomial, PrintParseRoundTrip) {
  Rng rng(14);
  for (int k = 0; k < 100; ++k) {
    Rational c(rng.uniform_int(1, 5), rng.uniform_int(1, 7));
    c.canonicalize();
    Polynomial p = random_polynomial(rng, 2, 3, 4) * c;
    EXPECT_EQ(P(to_string(p, kCoords)), p) << to_string(p, kCoords);
  }
}

TEST(Polynomial, ChartMismatchThrows) {
  EXPECT_THROW(Polynomial(2) + Polynomial(3), std::invalid_argument);
}
