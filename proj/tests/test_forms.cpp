#include <gtest/gtest.h>

#include "lrc/forms.hpp"
#include "lrc/sampling.hpp"

using namespace lrc;

namespace {

struct S1 {
  Chart chart{{"x"}, {"u1", "u2"}};
  SplittingPtr sp = Splitting::make(chart, {{Polynomial(3)}, {Polynomial::variable(3, 1)}});
  SplittingPtr flat = Splitting::flat(chart);
  Form f(const std::string& s) const { return parse_form(s, sp); }
  Form fn(std::size_t c) const { return Form::function(sp, sp->coordinate(c)); }
};

}  // namespace

TEST(Forms, WedgeUnitAndSquares) {
  S1 s;
  Rng rng(1);
  const Form a = random_form_of_degree(rng, s.sp, 2);
  EXPECT_EQ(wedge(Form::constant(s.sp, 1), a), a);
  EXPECT_TRUE(wedge(Form::generator(s.sp, 0), Form::generator(s.sp, 0)).is_zero());
  EXPECT_TRUE(s.f("dx ^ dx").is_zero());
}

TEST(Forms, WedgeAssociativeOnGenerators) {
  S1 s;
  const Form g0 = Form::generator(s.sp, 0), g1 = Form::generator(s.sp, 1), g2 = Form::generator(s.sp, 2);
  EXPECT_EQ(wedge(wedge(g0, g1), g2), wedge(g0, wedge(g1, g2)));
  EXPECT_EQ(wedge(wedge(g0, g1), g2), Form::monomial(s.sp, 0b111, s.sp->constant(1)));
}

TEST(Forms, GradedCommutativeAndAssociative) {
  S1 s;
  Rng rng(2);
  for (int k = 0; k < 30; ++k) {
    const int da = rng.uniform_int(0, 2), db = rng.uniform_int(0, 2);
    const Form a = random_form_of_degree(rng, s.sp, da), b = random_form_of_degree(rng, s.sp, db),
               c = random_form_of_degree(rng, s.sp, rng.uniform_int(0, 1));
    EXPECT_EQ(wedge(a, b), Rational((da * db) % 2 ? -1 : 1) * wedge(b, a));
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
  }
}

TEST(Forms, ExteriorDOnS1) {
  S1 s;
  EXPECT_TRUE(exterior_d(Form::constant(s.sp, 5)).is_zero());
  // dx = dCx + u1 du2 because dCx = dx - u1 du2
  EXPECT_EQ(exterior_d(s.fn(0)), Form::generator(s.sp, 0) + wedge(s.fn(1), Form::generator(s.sp, 2)));
  EXPECT_EQ(s.f("dx"), Form::generator(s.sp, 0) + wedge(s.fn(1), Form::generator(s.sp, 2)));
  // d(dCx) = -du1 ^ du2
  EXPECT_EQ(exterior_d(Form::generator(s.sp, 0)), -s.f("du1 ^ du2"));
}

TEST(Forms, DSquaredAndLeibniz) {
  S1 s;
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const Form f = Form::function(s.sp, random_polynomial(rng, 3));
    EXPECT_TRUE(exterior_d(exterior_d(f)).is_zero());
    const int da = rng.uniform_int(0, 2);
    const Form a = random_form_of_degree(rng, s.sp, da), b = random_form_of_degree(rng, s.sp, rng.uniform_int(0, 1));
    EXPECT_TRUE(exterior_d(exterior_d(a)).is_zero());
    EXPECT_EQ(exterior_d(wedge(a, b)), wedge(exterior_d(a), b) + Rational(da % 2 ? -1 : 1) * wedge(a, exterior_d(b)));
  }
}

TEST(Forms, BidegreeProjection) {
  S1 s;
  Rng rng(4);
  const Form f = s.fn(1);
  EXPECT_EQ(bidegree_project(f, 0, 0), f);
  const Form m = wedge(Form::generator(s.sp, 0), Form::generator(s.sp, 1));
  EXPECT_EQ(bidegree_project(m, 1, 1), m);
  EXPECT_TRUE(bidegree_project(m, 0, 2).is_zero());
  for (int k = 0; k < 20; ++k) {
    const Form a = random_form_of_degree(rng, s.sp, rng.uniform_int(0, 3));
    Form sum(s.sp);
    for (int r = 0; r <= 2; ++r)
      for (int l = 0; l <= 1; ++l) sum += bidegree_project(a, r, l);
    EXPECT_EQ(sum, a);
    EXPECT_EQ(bidegree_project(bidegree_project(a, 1), 1), bidegree_project(a, 1));
  }
}

TEST(Forms, ContractVector) {
  S1 s;
  EXPECT_EQ(contract_vector(VectorField::coordinate(s.sp, 0), Form::generator(s.sp, 0)), Form::constant(s.sp, 1));
  EXPECT_TRUE(contract_vector(VectorField::transversal(s.sp, 1), Form::generator(s.sp, 0)).is_zero());
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const VectorField X = random_vector_field(rng, s.sp);
    const Form a = random_form_of_degree(rng, s.sp, rng.uniform_int(1, 3));
    EXPECT_TRUE(contract_vector(X, contract_vector(X, a)).is_zero());
  }
}

TEST(Forms, Reframe) {
  S1 s;
  Rng rng(6);
  const Form g = Form::generator(s.sp, 0);
  EXPECT_EQ(reframe(g, s.sp), g);
  // into the flat coframe: dCx = dx - u1 du2
  EXPECT_EQ(reframe(g, s.flat), Form::generator(s.flat, 0) - wedge(Form::function(s.flat, s.flat->coordinate(1)),
                                                                   Form::generator(s.flat, 2)));
  for (int k = 0; k < 25; ++k) {
    const Form a = random_form_of_degree(rng, s.sp, rng.uniform_int(0, 2)),
               b = random_form_of_degree(rng, s.sp, rng.uniform_int(0, 2));
    EXPECT_EQ(reframe(reframe(a, s.flat), s.sp), a);
    EXPECT_EQ(reframe(wedge(a, b), s.flat), wedge(reframe(a, s.flat), reframe(b, s.flat)));
    EXPECT_EQ(reframe(exterior_d(a), s.flat), exterior_d(reframe(a, s.flat)));
  }
}

TEST(Forms, MixingSplittingsIsAnError) {
  S1 s;
  EXPECT_THROW(wedge(Form::generator(s.sp, 0), Form::generator(s.flat, 1)), std::invalid_argument);
  Chart bad{{"x", "x"}, {}};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}
