#include <gtest/gtest.h>

#include "lrc/expression.hpp"
#include "lrc/foliation.hpp"
#include "lrc/sampling.hpp"

using namespace lrc;

namespace {

struct S1 {
  Chart chart{{"x"}, {"u1", "u2"}};
  SplittingPtr sp = Splitting::make(chart, {{Polynomial(3)}, {Polynomial::variable(3, 1)}});
  FoliationStructure F = FoliationStructure::build(sp);
  FoliationAlgebra alg{F};
  Form one = Form::constant(sp, 1);
  Form fn(std::size_t c) const { return Form::function(sp, sp->coordinate(c)); }
  FormVector V(std::size_t a) const { return FormVector::frame(one, 1 + a); }
};

struct Flat {
  SplittingPtr sp = Splitting::flat(Chart{{"x"}, {"u1", "u2"}});
  FoliationStructure F = FoliationStructure::build(sp);
  FoliationAlgebra alg{F};
};

void expect_pass(const CheckReport& rep) {
  EXPECT_FALSE(rep.entries.empty());
  for (const auto& e : rep.entries) EXPECT_TRUE(e.passed()) << e.id << ": " << e.residual;
}

}  // namespace

TEST(Structure, ProjectorsAndCurvatureOnS1) {
  S1 s;
  const VectorField v2 = VectorField::transversal(s.sp, 1);
  EXPECT_EQ(v2.coeff[0], s.sp->coordinate(1));  // V_2 = d/du2 + u1 d/dx
  EXPECT_EQ(s.F.pV, FormVector::frame(Form::generator(s.sp, 1), 1) + FormVector::frame(Form::generator(s.sp, 2), 2));
  EXPECT_EQ(s.F.pC + s.F.pV, identity_field(s.sp));
  EXPECT_EQ(s.F.curvature, FormVector::frame(parse_form("du1 ^ du2", s.sp), 0));
  EXPECT_FALSE(s.F.is_flat());
  EXPECT_TRUE(Flat().F.is_flat());
}

TEST(Structure, CurvatureOracle) {
  // R from 1/2 [L_PC, L_PC] on coordinate functions, reconstructed
  S1 s;
  std::vector<Form> values;
  for (std::size_t c = 0; c < s.sp->m(); ++c) {
    const Form f = s.fn(c);
    values.push_back(lie_derivative(s.F.pC, lie_derivative(s.F.pC, f)));
  }
  EXPECT_EQ(from_coordinate_values(s.sp, values), s.F.curvature);
}

TEST(Tables, S1) {
  S1 s;
  Rng rng(1);
  EXPECT_TRUE(fn_bracket(s.F.curvature, s.F.curvature).is_zero());
  EXPECT_EQ(fn_bracket(s.F.pC, s.F.pV), Rational(-2) * s.F.curvature);
  EXPECT_TRUE(fn_bracket(s.F.pC, s.F.curvature).is_zero());
  EXPECT_TRUE(fn_bracket(s.F.pV, s.F.curvature).is_zero());
  expect_pass(bracket_table_check(s.F, rng, 25));
}

TEST(Components, DecompositionOfD) {
  S1 s;
  Rng rng(2);
  expect_pass(differential_components_check(s.F, rng, 50));
  const Form f = Form::function(s.sp, parse_expression("x^2*u2", s.chart.coordinates()));
  EXPECT_EQ(d_component(f, 0), parse_form("2*x*u2 * dx", s.sp) - parse_form("2*x*u1*u2 * du2", s.sp));
  EXPECT_EQ(d_component(Form::generator(s.sp, 0), 2), -parse_form("du1 ^ du2", s.sp));
  EXPECT_TRUE(d_component(Form::generator(s.sp, 0), 1).is_zero());
  Flat fl;
  EXPECT_TRUE(d_component(Form::generator(fl.sp, 0), 2).is_zero());
}

TEST(Dbar, Examples) {
  S1 s;
  Rng rng(3);
  EXPECT_TRUE(dbar(s.F, s.fn(1)).is_zero());
  EXPECT_EQ(dbar(s.F, wedge(s.fn(0), s.fn(1))), wedge(s.fn(1), Form::generator(s.sp, 0)));
  EXPECT_THROW(dbar(s.F, Form::generator(s.sp, 1)), std::invalid_argument);
  EXPECT_EQ(dbar(s.F, s.V(1)), dbar_bott(s.F, s.V(1)));
  expect_pass(dbar_check(s.F, rng, 25));
}

TEST(Pairing, Examples) {
  S1 s;
  Rng rng(4);
  const Form a = s.fn(0);
  EXPECT_EQ(evaluate_pairing(a, {}), a);
  EXPECT_EQ(evaluate_pairing(Form::generator(s.sp, 1), {s.V(0)}), s.one);
  EXPECT_EQ(evaluate_pairing(parse_form("du1 ^ du2", s.sp), {s.V(0), s.V(1)}), -s.one);
  EXPECT_THROW(evaluate_pairing(Form::generator(s.sp, 1), {}), std::invalid_argument);
  expect_pass(pairing_check(s.F, rng, 25));
}

TEST(Anchors, Examples) {
  S1 s;
  const Form xu = wedge(s.fn(0), s.fn(1));
  EXPECT_EQ(s.alg.anchor({}, xu), wedge(s.fn(1), Form::generator(s.sp, 0)));
  EXPECT_EQ(s.alg.anchor({s.V(1)}, s.fn(0)), s.fn(1));
  EXPECT_TRUE(s.alg.anchor({s.V(0), s.V(1)}, s.fn(0)).is_zero());
  Flat fl;
  Rng rng(5);
  for (int k = 0; k < 10; ++k) {
    const auto z1 = random_q(rng, fl.sp), z2 = random_q(rng, fl.sp);
    EXPECT_TRUE(fl.alg.anchor({z1, z2}, random_abar(rng, fl.sp)).is_zero());
    EXPECT_TRUE(fl.alg.bracket({z1, z2, random_q(rng, fl.sp)}).is_zero());
  }
}

TEST(Brackets, Examples) {
  S1 s;
  Flat fl;
  EXPECT_TRUE(fl.alg.bracket({FormVector::frame(Form::constant(fl.sp, 1), 1)}).is_zero());
  EXPECT_TRUE(s.alg.bracket({s.V(0), s.V(1)}).is_zero());
  EXPECT_EQ(s.alg.bracket({FormVector::frame(s.fn(1), 2), s.V(0)}), -s.V(1));
  Rng rng(6);
  for (int k = 0; k < 10; ++k) EXPECT_TRUE(s.alg.bracket({random_q(rng, s.sp), random_q(rng, s.sp), random_q(rng, s.sp),
                                                         random_q(rng, s.sp)}).is_zero());
}

TEST(Brackets, StructureChecks) {
  S1 s;
  Rng rng(7);
  expect_pass(structure_check(s.alg, rng, 25));
}

TEST(AltBinary, AgreesOnS1AndFlat) {
  S1 s;
  Flat fl;
  Rng rng(8);
  expect_pass(alt_binary_check(s.F, rng, 25));
  expect_pass(alt_binary_check(fl.F, rng, 25));
}

TEST(ChevalleyEilenberg, ComponentsOfD) {
  S1 s;
  Rng rng(9);
  expect_pass(ce_component_check(s.F, rng, 25, 2, 2));
}

TEST(Jacobiators, VanishUpToFive) {
  S1 s;
  Rng rng(10);
  expect_pass(jacobiator_check(s.alg, rng, 25, 5));
}

TEST(Jacobiators, LieRinehart) {
  S1 s;
  Rng rng(11);
  expect_pass(lrp_check(s.alg, rng, 25, 3));
}

TEST(Jacobiators, TwoLeafChart) {
  Chart c{{"x1", "x2"}, {"u1", "u2"}};
  auto V = [](std::size_t i) { return Polynomial::variable(4, i); };
  const auto F = FoliationStructure::build(Splitting::make(c, {{V(3), Polynomial(4)}, {V(0), V(2) * V(3)}}));
  FoliationAlgebra alg(F);
  Rng rng(12);
  expect_pass(jacobiator_check(alg, rng, 5, 4));
  expect_pass(lrp_check(alg, rng, 5, 3));
}

TEST(Mutations, EverySingleSignFlipIsCaught) {
  S1 s;
  for (auto m : {BracketMutation::DropParity, BracketMutation::FlipFnTerm, BracketMutation::FlipCurvatureTerm,
                 BracketMutation::SecondParity, BracketMutation::FormDegreeParity}) {
    FoliationAlgebra bad(s.F, m);
    Rng rng(13);
    const auto rep = jacobiator_check(bad, rng, 25, 3);
    bool caught = false;
    for (const auto& e : rep.entries)
      if (!e.passed() && (e.id.rfind("J2", 0) == 0 || e.id.rfind("J3", 0) == 0)) caught = true;
    EXPECT_TRUE(caught) << static_cast<int>(m);
  }
}
