#include <gtest/gtest.h>

#include "lrc/alt_constructions.hpp"
#include "lrc/sampling.hpp"

using namespace lrc;

namespace {

std::vector<FoliationStructure> charts() {
  Chart c{{"x"}, {"u1", "u2"}};
  Chart c2{{"x1", "x2"}, {"u1", "u2"}};
  auto V = [](std::size_t i) { return Polynomial::variable(4, i); };
  return {FoliationStructure::build(Splitting::make(c, {{Polynomial(3)}, {Polynomial::variable(3, 1)}})),
          FoliationStructure::build(Splitting::flat(c)),
          FoliationStructure::build(Splitting::make(c2, {{V(3), Polynomial(4)}, {V(0), V(2) * V(3)}}))};
}

void expect_pass(const CheckReport& rep) {
  EXPECT_FALSE(rep.entries.empty());
  for (const auto& e : rep.entries) EXPECT_TRUE(e.passed()) << e.id << ": " << e.residual;
}

}  // namespace

TEST(VData, Axioms) {
  for (const auto& F : charts()) {
    Rng rng(51);
    expect_pass(vdata_check(F, rng, 8));
  }
}

TEST(VData, DerivedBracketsMatchFoliationAlgebra) {
  const auto all = charts();
  for (std::size_t i = 0; i < all.size(); ++i) {
    Rng rng(52);
    expect_pass(derived_equivalence_check(all[i], rng, i == 2 ? 3 : 8, 4));
  }
}

TEST(VData, UnaryExamples) {
  const auto F = charts()[0];
  const auto& sp = F.sp;
  const FormVector xv2 = FormVector::frame(Form::function(sp, sp->coordinate(0)), 2);
  const VProjection r = derived_bracket(sp, {MixedArg::from_q(xv2)});
  EXPECT_EQ(r.q, dbar(F, xv2));
  EXPECT_EQ(r.q, FormVector::frame(Form::generator(sp, 0), 2));
  const Form xu1 = wedge(Form::function(sp, sp->coordinate(0)), Form::function(sp, sp->coordinate(1)));
  EXPECT_EQ(derived_bracket(sp, {MixedArg::from_abar(xu1)}).a, dbar(F, xu1));
  EXPECT_FALSE(FirstOrderOperator::exterior_d(sp).is_zero());
  EXPECT_TRUE(commutator(FirstOrderOperator::exterior_d(sp), FirstOrderOperator::exterior_d(sp)).is_zero());
}

TEST(Transfer, ContractionIdentities) {
  for (const auto& F : charts()) {
    Rng rng(53);
    expect_pass(contraction_identity_check(F, rng, 6));
  }
}

TEST(Transfer, BinaryBracketWithGlobalSign) {
  for (const auto& F : charts()) {
    Rng rng(54);
    int sign = 0;
    expect_pass(transferred_binary_check(F, rng, 8, &sign));
    EXPECT_EQ(sign, 1);
  }
}

TEST(Transfer, BinaryExample) {
  const auto F = charts()[0];
  const auto& sp = F.sp;
  const FormVector v1 = FormVector::frame(Form::constant(sp, 1), 1);
  const FormVector u1v2 = FormVector::frame(Form::function(sp, sp->coordinate(1)), 2);
  const FoliationAlgebra alg(F);
  EXPECT_EQ(alg.bracket({u1v2, v1}), -FormVector::frame(Form::constant(sp, 1), 2));
  // the sign (-)^{|Z1|} uses the form degree, 0 for u1 V_u2
  EXPECT_EQ(transfer_p(lbar_commutator(transfer_j(F, u1v2), transfer_j(F, v1))), alg.bracket({u1v2, v1}));
  const FormVector dxv1 = FormVector::frame(Form::generator(sp, 0), 1);
  EXPECT_EQ(transfer_p(lbar_commutator(transfer_j(F, dxv1), transfer_j(F, u1v2))), -alg.bracket({dxv1, u1v2}));
}
