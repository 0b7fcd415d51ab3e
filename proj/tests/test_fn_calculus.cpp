#include <gtest/gtest.h>

#include "lrc/fn_calculus.hpp"
#include "lrc/foliation.hpp"
#include "lrc/sampling.hpp"

using namespace lrc;

namespace {

struct S1 {
  Chart chart{{"x"}, {"u1", "u2"}};
  SplittingPtr sp = Splitting::make(chart, {{Polynomial(3)}, {Polynomial::variable(3, 1)}});
  FoliationStructure F = FoliationStructure::build(sp);
  Form one = Form::constant(sp, 1);
  Form fn(std::size_t c) const { return Form::function(sp, sp->coordinate(c)); }
};

Rational sgn(int e) { return Rational(e % 2 ? -1 : 1); }

}  // namespace

TEST(Insertion, KillsFunctions) {
  S1 s;
  Rng rng(1);
  for (int k = 0; k < 10; ++k)
    EXPECT_TRUE(insertion(random_form_vector(rng, s.sp, rng.uniform_int(0, 2)), s.fn(0)).is_zero());
}

TEST(Insertion, SingleContraction) {
  auto flat = Splitting::flat(Chart{{"x"}, {"u1", "u2"}});
  const FormVector dx_x = FormVector::frame(Form::constant(flat, 1), 0);
  const FormVector z = FormVector::frame(parse_form("dx ^ du1", flat), 1);
  EXPECT_EQ(insertion(dx_x, z), FormVector::frame(parse_form("du1", flat), 1));
}

TEST(Insertion, PCCountsLeafFactors) {
  S1 s;
  for (Mask m = 0; m < 8; ++m) {
    const Form a = Form::monomial(s.sp, m, s.sp->coordinate(1) + s.sp->constant(2));
    EXPECT_EQ(insertion(s.F.pC, a), Rational(popcount(m & s.sp->leaf_mask())) * a);
  }
}

TEST(LieDerivative, Examples) {
  auto flat = Splitting::flat(Chart{{"x"}, {"u1", "u2"}});
  const FormVector dx = FormVector::frame(Form::constant(flat, 1), 0);
  EXPECT_EQ(lie_derivative(dx, parse_form("x * du1", flat)), parse_form("du1", flat));
  S1 s;
  Rng rng(2);
  for (int k = 0; k < 50; ++k) {
    const int z = rng.uniform_int(0, 2);
    const FormVector Z = random_form_vector(rng, s.sp, z);
    const Form a = random_form_of_degree(rng, s.sp, rng.uniform_int(0, 2));
    // [L_Z, d] = 0 in the graded sense
    EXPECT_EQ(lie_derivative(Z, exterior_d(a)), sgn(z) * exterior_d(lie_derivative(Z, a)));
    EXPECT_EQ(lie_derivative(s.F.pC + s.F.pV, a), exterior_d(a));
  }
  EXPECT_EQ(identity_field(s.sp), s.F.pC + s.F.pV);
}

TEST(NrBracket, Examples) {
  S1 s;
  Rng rng(3);
  for (int k = 0; k < 10; ++k)
    EXPECT_TRUE(nr_bracket(random_form_vector(rng, s.sp, 0), random_form_vector(rng, s.sp, 0)).is_zero());
  const FormVector V2 = FormVector::frame(s.one, 2);
  EXPECT_EQ(nr_bracket(s.F.curvature, V2), FormVector::frame(-Form::generator(s.sp, 1), 0));
  // omega (x) X with i_X omega = 0
  const FormVector w = FormVector::frame(Form::generator(s.sp, 1), 0);
  EXPECT_TRUE(nr_bracket(w, w).is_zero());
}

TEST(FnBracket, Examples) {
  auto flat = Splitting::flat(Chart{{"x"}, {"u1", "u2"}});
  const FormVector dx = FormVector::frame(Form::constant(flat, 1), 0);
  const FormVector xdx = FormVector::frame(Form::function(flat, flat->coordinate(0)), 0);
  EXPECT_EQ(fn_bracket(dx, xdx), dx);
  S1 s;
  EXPECT_EQ(fn_bracket(s.F.pV, s.F.pV), Rational(2) * s.F.curvature);
  EXPECT_TRUE(fn_bracket(s.F.curvature, s.F.curvature).is_zero());
}

TEST(Operators, InsertionAndLieCoherence) {
  S1 s;
  Rng rng(4);
  for (int k = 0; k < 50; ++k) {
    const int z1 = rng.uniform_int(0, 2), z2 = rng.uniform_int(0, 2);
    const FormVector Z1 = random_form_vector(rng, s.sp, z1), Z2 = random_form_vector(rng, s.sp, z2);
    const Form a = random_form_of_degree(rng, s.sp, rng.uniform_int(0, 3));
    const Form ii = insertion(Z1, insertion(Z2, a)) - sgn((z1 - 1) * (z2 - 1)) * insertion(Z2, insertion(Z1, a));
    EXPECT_EQ(ii, insertion(nr_bracket(Z1, Z2), a));
    const Form ll = lie_derivative(Z1, lie_derivative(Z2, a)) - sgn(z1 * z2) * lie_derivative(Z2, lie_derivative(Z1, a));
    EXPECT_EQ(ll, lie_derivative(fn_bracket(Z1, Z2), a));
  }
}

TEST(Brackets, GradedJacobi) {
  S1 s;
  Rng rng(5);
  for (int k = 0; k < 10; ++k) {
    const int a = rng.uniform_int(0, 2), b = rng.uniform_int(0, 1), c = rng.uniform_int(0, 1);
    const FormVector X = random_form_vector(rng, s.sp, a), Y = random_form_vector(rng, s.sp, b),
                     Z = random_form_vector(rng, s.sp, c);
    // [[X,[[Y,Z]]]] = [[[[X,Y]],Z]] + (-)^{ab}[[Y,[[X,Z]]]]
    EXPECT_EQ(fn_bracket(X, fn_bracket(Y, Z)),
              fn_bracket(fn_bracket(X, Y), Z) + sgn(a * b) * fn_bracket(Y, fn_bracket(X, Z)));
    EXPECT_EQ(fn_bracket(X, Y), -sgn(a * b) * fn_bracket(Y, X));
    // NR bracket with shifted degrees a-1, b-1, c-1
    EXPECT_EQ(nr_bracket(X, nr_bracket(Y, Z)),
              nr_bracket(nr_bracket(X, Y), Z) + sgn((a - 1) * (b - 1)) * nr_bracket(Y, nr_bracket(X, Z)));
  }
}

TEST(Derivations, DecompositionRecoversParts) {
  S1 s;
  Rng rng(6);
  for (int k = 0; k < 10; ++k) {
    const int l = rng.uniform_int(0, 1);
    const FormVector Z = random_form_vector(rng, s.sp, l + 1), Y = random_form_vector(rng, s.sp, l);
    auto delta = [&](const Form& a) { return insertion(Z, a) + lie_derivative(Y, a); };
    std::vector<Form> on_f, on_df;
    for (std::size_t c = 0; c < s.sp->m(); ++c) on_f.push_back(delta(s.fn(c)));
    const FormVector Yr = from_coordinate_values(s.sp, on_f);
    for (std::size_t c = 0; c < s.sp->m(); ++c) {
      const Form dxc = exterior_d(s.fn(c));
      on_df.push_back(delta(dxc) - lie_derivative(Yr, dxc));
    }
    EXPECT_EQ(Yr, Y);
    EXPECT_EQ(from_coordinate_values(s.sp, on_df), Z);
  }
}

TEST(FnIdentities, AllHoldOnS1) {
  S1 s;
  Rng rng(7);
  const auto rep = fn_identity_suite(s.sp, rng, 25);
  EXPECT_EQ(rep.entries.size(), 6u * 25u);
  for (const auto& e : rep.entries) EXPECT_TRUE(e.residual.empty()) << e.identity << "#" << e.sample << " " << e.residual;
  EXPECT_TRUE(rep.all_zero());
}
