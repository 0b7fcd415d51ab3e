#pragma once

#include <set>
#include <vector>

#include "lrc/foliation.hpp"

namespace lrc {

class Rng;

/// Delta + w acting on Lambda(M): the derivation i_Z + L_Y followed by multiplication by w.
/// A homogeneous operator of degree l has |Z| = l + 1, |Y| = l, |w| = l.
struct FirstOrderOperator {
  FormVector z;
  FormVector y;
  Form scalar;

  static FirstOrderOperator zero(const SplittingPtr& sp);
  static FirstOrderOperator derivation(FormVector z, FormVector y);
  static FirstOrderOperator multiplication(Form w);
  /// The de Rham differential, L_I.
  static FirstOrderOperator exterior_d(const SplittingPtr& sp);

  const SplittingPtr& splitting() const { return scalar.splitting(); }
  bool is_zero() const { return z.is_zero() && y.is_zero() && scalar.is_zero(); }
  std::set<int> degrees() const;
  FirstOrderOperator part_of_degree(int deg) const;

  Form apply_derivation(const Form& a) const;
  /// Delta a + w ^ a.
  Form apply(const Form& a) const;

  FirstOrderOperator& operator+=(const FirstOrderOperator& o);
  FirstOrderOperator& operator-=(const FirstOrderOperator& o);
  FirstOrderOperator& operator*=(const Rational& c);
  friend FirstOrderOperator operator+(FirstOrderOperator a, const FirstOrderOperator& b) { return a += b; }
  friend FirstOrderOperator operator-(FirstOrderOperator a, const FirstOrderOperator& b) { return a -= b; }
  friend FirstOrderOperator operator*(const Rational& c, FirstOrderOperator a) { return a *= c; }
};

/// [(D, w), (N, r)] = ([D, N], D r - (-)^{wN} N w), derivation commutators by the FN formulas.
FirstOrderOperator commutator(const FirstOrderOperator& a, const FirstOrderOperator& b);

/// Embedding of Q (+) Abar: q -> i_q, a -> -a.
FirstOrderOperator vdata_embed(const FormVector& q);
FirstOrderOperator vdata_embed(const Form& a);

struct VProjection {
  FormVector q;
  Form a;
};
/// P(Delta, w) = (sum_a overline(Delta du^a) V_a, -overline(w)).
VProjection vdata_project(const FirstOrderOperator& op);

/// One argument of a derived bracket: an element of Q or of Abar.
struct MixedArg {
  bool is_q = true;
  FormVector q;
  Form a;
  static MixedArg from_q(FormVector q) { return {true, std::move(q), Form(q.splitting())}; }
  static MixedArg from_abar(Form a) { return {false, FormVector(a.splitting()), std::move(a)}; }
  FirstOrderOperator embed() const { return is_q ? vdata_embed(q) : vdata_embed(a); }
  /// Shifted degree for Q entries, form degree for Abar entries.
  int degree() const;
};

/// P[[..[[D, i(b_1)], i(b_2)]..], i(b_k)] with D the de Rham differential.
VProjection derived_bracket(const SplittingPtr& sp, const std::vector<MixedArg>& args);

/// V-data axioms, P o i = id, abelian image, and the operator meaning of the commutator.
CheckReport vdata_check(const FoliationStructure& F, Rng& rng, std::size_t samples);
/// Derived brackets against the foliation brackets and anchors, arities 1..max_arity.
CheckReport derived_equivalence_check(const FoliationStructure& F, Rng& rng, std::size_t samples, int max_arity = 4);

/// Derivation of Abar of degree l, given on the free generators: coordinates (values of degree l)
/// and the leaf differentials dbar x^i (values of degree l + 1).
struct LBarDerivation {
  SplittingPtr sp;
  int degree = 0;
  std::vector<Form> on_coordinates;
  std::vector<Form> on_differentials;

  static LBarDerivation zero(const SplittingPtr& sp, int degree);
  Form apply(const Form& lambda) const;
  bool is_zero() const;
  LBarDerivation& operator+=(const LBarDerivation& o);
  LBarDerivation& operator-=(const LBarDerivation& o);
  friend LBarDerivation operator-(LBarDerivation a, const LBarDerivation& b) { return a -= b; }
  friend LBarDerivation operator+(LBarDerivation a, const LBarDerivation& b) { return a += b; }
};

LBarDerivation lbar_commutator(const LBarDerivation& a, const LBarDerivation& b);
/// dbar as an element of Der Abar.
LBarDerivation dbar_derivation(const FoliationStructure& F);
/// Delta = [dbar, .].
LBarDerivation delta(const FoliationStructure& F, const LBarDerivation& d);
std::string residual_of(const LBarDerivation& d);

/// j(Z) lambda = overline(L_Z lambda).
LBarDerivation transfer_j(const FoliationStructure& F, const FormVector& z);
/// p(D) = overline(D restricted to functions).
FormVector transfer_p(const LBarDerivation& d);
/// h(D) f = 0, h(D) dbar f = (-)^D (D - j p D) f.
LBarDerivation transfer_h(const FoliationStructure& F, const LBarDerivation& d);

LBarDerivation random_lbar_derivation(Rng& rng, const SplittingPtr& sp, int degree);

/// p j = id, chain maps, id - jp = Delta h + h Delta, h j = 0, h h = 0.
CheckReport contraction_identity_check(const FoliationStructure& F, Rng& rng, std::size_t samples);

/// p[j Z1, j Z2] = sign (-)^{|Z1|} {Z1, Z2} with one global sign, reported in the entry "global-sign=+1|-1".
CheckReport transferred_binary_check(const FoliationStructure& F, Rng& rng, std::size_t samples, int* sign_out = nullptr);

}  // namespace lrc
