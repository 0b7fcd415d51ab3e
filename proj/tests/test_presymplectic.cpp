#include <gtest/gtest.h>

#include "lrc/presymplectic.hpp"
#include "lrc/sampling.hpp"

using namespace lrc;

namespace {

struct S1 {
  Chart chart{{"x"}, {"u1", "u2"}};
  SplittingPtr sp = Splitting::make(chart, {{Polynomial(3)}, {Polynomial::variable(3, 1)}});
  FoliationStructure F = FoliationStructure::build(sp);
  PresymplecticData D = PresymplecticData::validate(F, parse_form("du1 ^ du2", sp));
  Form fn(std::size_t c) const { return Form::function(sp, sp->coordinate(c)); }
};

FoliationStructure two_leaf() {
  Chart c{{"x1", "x2"}, {"u1", "u2"}};
  auto V = [](std::size_t i) { return Polynomial::variable(4, i); };
  return FoliationStructure::build(Splitting::make(c, {{V(3), Polynomial(4)}, {V(0), V(2) * V(3)}}));
}

void expect_pass(const CheckReport& rep) {
  EXPECT_FALSE(rep.entries.empty());
  for (const auto& e : rep.entries) EXPECT_TRUE(e.passed()) << e.id << ": " << e.residual;
}

}  // namespace

TEST(Presymplectic, Validation) {
  S1 s;
  EXPECT_THROW(PresymplecticData::validate(s.F, parse_form("dx ^ du1", s.sp)), std::invalid_argument);
  EXPECT_THROW(PresymplecticData::validate(s.F, parse_form("x * du1 ^ du2", s.sp)), std::invalid_argument);
  EXPECT_THROW(PresymplecticData::validate(s.F, parse_form("u1 * du1 ^ du2", s.sp)), std::invalid_argument);
  EXPECT_THROW(PresymplecticData::validate(s.F, Form(s.sp)), std::invalid_argument);
  const auto D2 = PresymplecticData::validate(s.F, parse_form("2 * du1 ^ du2", s.sp));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) EXPECT_EQ(D2.inverse[a][b], s.D.inverse[a][b] * Polynomial::constant(3, Rational(1, 2)));
}

TEST(Presymplectic, Examples) {
  S1 s;
  const std::size_t m = s.sp->m();
  EXPECT_EQ(s.D.inverse[0][1], Polynomial::constant(m, -1));
  EXPECT_EQ(s.D.inverse[1][0], Polynomial::constant(m, 1));
  EXPECT_EQ(sharp(s.D, Form::generator(s.sp, 1)), -FormVector::frame(Form::constant(s.sp, 1), 2));
  EXPECT_EQ(flat(s.D, sharp(s.D, Form::generator(s.sp, 2))), Form::generator(s.sp, 2));
  const Form u1 = s.fn(1), u2 = s.fn(2), x = s.fn(0);
  EXPECT_EQ(op_bracket(s.D, {u1, u2}, {-1, -1}), Form::constant(s.sp, 1));
  EXPECT_EQ(op_bracket(s.D, {x}, {-1}), dbar(s.F, x));
  EXPECT_EQ(hamiltonian_tower(s.D, {u1}, {-1}), FormVector::frame(Form::constant(s.sp, 1), 2));
  EXPECT_TRUE(hamiltonian_tower(s.D, {u1, u2}, {-1, -1}).is_zero());
  EXPECT_TRUE(op_bracket(s.D, {u1, u2, x}, {-1, -1, -1}).is_zero());
}

TEST(Presymplectic, DataChecks) {
  S1 s;
  Rng rng(41);
  expect_pass(presymplectic_data_check(s.D, rng, 25));
}

TEST(Presymplectic, BinaryAnchorRecursion) {
  S1 s;
  Rng rng(42);
  expect_pass(anchor_recursion_check(s.D, rng, 10, 3));
  const auto D = PresymplecticData::validate(two_leaf(), parse_form("du1 ^ du2", two_leaf().sp));
  Rng r2(43);
  expect_pass(anchor_recursion_check(D, r2, 6, 3));
  Rng r3(43);
  const auto wrong = anchor_recursion_check(D, r3, 6, 3, Rational(1));
  bool failed = false;
  for (const auto& e : wrong.entries) failed = failed || !e.passed();
  EXPECT_TRUE(failed);
}

TEST(Presymplectic, HamiltonianFamilyIsAMorphism) {
  S1 s;
  Rng rng(44);
  expect_pass(kx_defect_check(s.D, rng, 10, 3));
}

TEST(Presymplectic, OpJacobiators) {
  S1 s;
  Rng rng(45);
  expect_pass(op_jacobiator_check(s.D, rng, 8, 5));
  const auto fl = FoliationStructure::build(Splitting::flat(s.chart));
  const auto D = PresymplecticData::validate(fl, parse_form("du1 ^ du2", fl.sp));
  Rng r2(46);
  const auto rep = op_jacobiator_check(D, r2, 10, 4);
  expect_pass(rep);
  bool strict = false;
  for (const auto& e : rep.entries) strict = strict || e.id.find("strict") != std::string::npos;
  EXPECT_TRUE(strict);
}
