#pragma once

#include <string>
#include <vector>

#include "lrc/fn_calculus.hpp"
#include "lrc/forms.hpp"
#include "lrc/linfty.hpp"

namespace lrc {

class Rng;

/// Projectors and curvature of a splitting.  R = 1/2 [[P^C, P^C]].
struct FoliationStructure {
  SplittingPtr sp;
  FormVector pC;
  FormVector pV;
  FormVector curvature;

  static FoliationStructure build(SplittingPtr sp);
  static FoliationStructure build(const Chart& chart, const std::vector<std::vector<Polynomial>>& v);
  bool is_flat() const { return curvature.is_zero(); }
};

/// Drop every monomial containing a du factor.
Form overline(const Form& a);
/// Keep the V-components, with their form factors reduced by overline(Form).
FormVector overline(const FormVector& z);
/// No du generators anywhere.
bool is_abar(const Form& a);
/// Leafwise form coefficients on the V_a only.
bool is_q_element(const FormVector& z);
/// Form degree minus one; throws for inhomogeneous input, 0 for zero input.
int shifted_degree(const FormVector& z);
int form_degree(const Form& a);

// Operators on Lambda(M).
Form d_C(const FoliationStructure& F, const Form& a);
Form d_V(const FoliationStructure& F, const Form& a);
Form i_R(const FoliationStructure& F, const Form& a);
Form L_R(const FoliationStructure& F, const Form& a);
/// Bidegree (k, 1-k) part of d: sum over r of project(d project(a, r), r + k).
Form d_component(const Form& a, int k);

/// dbar on leafwise forms; throws when the input has du components.
Form dbar(const FoliationStructure& F, const Form& lambda);
/// dbar on Q through [[P^C, Z]] - [R, Z]_nr.
FormVector dbar(const FoliationStructure& F, const FormVector& z);
/// dbar on Q through the Bott connection: coefficients differentiated leafwise.
FormVector dbar_bott(const FoliationStructure& F, const FormVector& z);

enum class PairingSign {
  Multiplicative,  // chi = r + wbar * sum Zbar
  Printed,         // chi = r + wbar (r(r-1)/2 + sum Zbar)
};

/// <w | Z_1..Z_r> = (-)^chi i_{Z_1} ... i_{Z_r} w for w with r du factors.
Form evaluate_pairing(const Form& omega, const std::vector<FormVector>& zs,
                      PairingSign convention = PairingSign::Multiplicative);

/// Single-sign perturbations of the binary bracket, used by mutation tests.
enum class BracketMutation {
  None,
  DropParity,        // -[[Z1,Z2]] instead of -(-)^{Z1}[[Z1,Z2]]
  FlipFnTerm,        // +(-)^{Z1}[[Z1,Z2]]
  FlipCurvatureTerm, // -[[R,Z1]_nr,Z2]_nr
  SecondParity,      // (-)^{Z2} in place of (-)^{Z1}
  FormDegreeParity,  // (-)^{|Z1|} with the unshifted degree
};

/// Anchors {Z_1..Z_{k-1} | lambda} and brackets {Z_1..Z_k} of the foliation algebra.
class FoliationAlgebra {
 public:
  explicit FoliationAlgebra(FoliationStructure F, BracketMutation mutation = BracketMutation::None);

  const FoliationStructure& structure() const { return F_; }
  const SplittingPtr& splitting() const { return F_.sp; }

  Form anchor(const std::vector<FormVector>& zs, const Form& lambda) const;
  FormVector bracket(const std::vector<FormVector>& zs) const;
  /// Same operations with the shifted degrees of the Z's supplied by the caller.
  Form anchor(const std::vector<FormVector>& zs, const std::vector<int>& deg, const Form& lambda) const;
  FormVector bracket(const std::vector<FormVector>& zs, const std::vector<int>& deg) const;

  BracketOracle<FormVector> bracket_oracle() const;
  AnchorOracle<FormVector, Form> anchor_oracle() const;

 private:
  FoliationStructure F_;
  BracketMutation mutation_;
};

/// The same structure read off the bidegree components of d through the pairing
/// (anchors from d_{k-1} on functions, brackets from d_{k-1} on Q^*).
class DerivedFromD {
 public:
  explicit DerivedFromD(FoliationStructure F) : F_(std::move(F)) {}
  Form anchor(const std::vector<FormVector>& zs, const Form& lambda) const;
  FormVector bracket(const std::vector<FormVector>& zs) const;

 private:
  FoliationStructure F_;
};

/// One named check with an optional printable residual.
struct CheckEntry {
  std::string id;
  std::string residual;  // empty when the check passes
  bool passed() const { return residual.empty(); }
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  bool all_passed() const;
  void add(std::string id, std::string residual) { entries.push_back({std::move(id), std::move(residual)}); }
  void append(const CheckReport& o) { entries.insert(entries.end(), o.entries.begin(), o.entries.end()); }
};

std::string residual_of(const Form& a);
std::string residual_of(const FormVector& z);

/// Random Q and Abar samples of small degree.
FormVector random_q(Rng& rng, const SplittingPtr& sp, int max_form_degree = 1);
Form random_abar(Rng& rng, const SplittingPtr& sp, int max_degree = 1);

/// FN table among P^C, P^V, R (with Bianchi) and the operator table among d^C, d^V, i_R, L_R.
CheckReport bracket_table_check(const FoliationStructure& F, Rng& rng, std::size_t samples);
/// d_0 = d^C - i_R, d_1 = d^V + 2 i_R, d_2 = -i_R, nothing above, d^2 = 0, and the commutator relations.
CheckReport differential_components_check(const FoliationStructure& F, Rng& rng, std::size_t samples);
/// dbar: closed form against the Bott form, d^C - i_R on leafwise forms, dbar^2 = 0.
CheckReport dbar_check(const FoliationStructure& F, Rng& rng, std::size_t samples);
/// Graded symmetry and A-linearity of the pairing; the product rule of wedge under the pairing.
CheckReport pairing_check(const FoliationStructure& F, Rng& rng, std::size_t samples);
/// Alternative binary formulas: -(-)^{Z1} overline([[Z1,Z2]]) and -(-)^Z overline(L_Z lambda).
CheckReport alt_binary_check(const FoliationStructure& F, Rng& rng, std::size_t samples);
/// Higher Chevalley-Eilenberg evaluation of d_k w against project(dw) through the pairing.
CheckReport ce_component_check(const FoliationStructure& F, Rng& rng, std::size_t samples, int max_r = 2,
                               int max_k = 2);
/// Jacobiators and module Jacobiators for arities 1..max_arity.
CheckReport jacobiator_check(const FoliationAlgebra& alg, Rng& rng, std::size_t samples, int max_arity);
/// {Z.., lambda Z_k} = {Z..|lambda} Z_k + (-)^{lambda(Z..+1)} lambda {Z.., Z_k} for k = 1..max_k.
CheckReport lrp_check(const FoliationAlgebra& alg, Rng& rng, std::size_t samples, int max_k = 3);
/// Closure in Q, graded symmetry, anchor derivation property and multilinearity.
CheckReport structure_check(const FoliationAlgebra& alg, Rng& rng, std::size_t samples);

}  // namespace lrc
