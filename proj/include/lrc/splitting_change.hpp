#pragma once

#include <vector>

#include "lrc/foliation.hpp"
#include "lrc/linfty.hpp"

namespace lrc {

/// Two splittings V (target) and V' (source) of the same chart, with
/// Delta = P^C - 'P^C = (V'_a^i - V_a^i) du^a (x) d/dx^i in the V' presentation.
/// The reframe Lambda(M) -> Lambda(M) written in V'-coordinates is exp(i_Delta).
struct SplittingPair {
  FoliationStructure target;  // V
  FoliationStructure source;  // V'
  FormVector delta;

  static SplittingPair build(SplittingPtr v, SplittingPtr v_prime);
  SplittingPair reversed() const;
};

/// Leafwise identification between the two presentations: reframe, then drop du terms.
Form identify(const SplittingPair& pr, const Form& a);            // V' -> V
Form identify_back(const SplittingPair& pr, const Form& a);       // V -> V'
FormVector identify(const SplittingPair& pr, const FormVector& z);  // Q' -> Q

/// psi_k(lambda) for lambda in Abar: the du^k part of lambda rewritten in the V' coframe.
Form psi(const SplittingPair& pr, const Form& lambda, int k);
/// i_Delta^k psi_0(lambda) / k!.
Form psi_closed(const SplittingPair& pr, const Form& lambda, int k);
/// Psi_k(w) for w with one du factor.
Form Psi(const SplittingPair& pr, const Form& omega, int k);
/// i_Delta^{k-1} Psi_1(w) / (k-1)!.
Form Psi_closed(const SplittingPair& pr, const Form& omega, int k);

/// phi_k(Z'..|lambda) = (-)^{lambda sum Z'} identify <psi_k(lambda)|Z'..>; phi_0 is the identity.
Form phi(const SplittingPair& pr, const std::vector<FormVector>& zs, const std::vector<int>& deg, const Form& lambda,
         int lambda_deg);
/// Right side R_k(w) of the implicit definition of Phi_k, evaluated on Z'_1..Z'_k.
Form phi_rhs(const SplittingPair& pr, const Form& omega, const std::vector<FormVector>& zs,
             const std::vector<int>& deg);
/// Phi_k(Z'..) in Q, from R_k(du^a) for every a.
FormVector Phi(const SplittingPair& pr, const std::vector<FormVector>& zs, const std::vector<int>& deg);
/// identify sum_{S_k} alpha i_{Z'_1} i_{DZ'_2} .. i_{DZ'_{k-1}} DZ'_k with DZ' = delta_scale i_Delta Z'.
/// The recursion is reproduced by delta_scale = +1; with -1 every even k picks up a wrong sign.
FormVector Phi_closed(const SplittingPair& pr, const std::vector<FormVector>& zs, const std::vector<int>& deg,
                      const Rational& delta_scale = Rational(1));

MorphismFamily<FormVector, FormVector> Phi_family(const SplittingPair& pr, int max_arity);
AnchoredFamily<FormVector, Form> phi_family(const SplittingPair& pr);
/// Anchors of the V' algebra acting on Abar through the identification.
AnchorOracle<FormVector, Form> source_anchor_oracle(const SplittingPair& pr);

/// Closed forms, the expansion of psi(w) through phi and Phi, A-linearity of R_k,
/// the morphism conditions up to max_arity, and reversal.
CheckReport splitting_change_check(const SplittingPair& pr, Rng& rng, std::size_t samples, int max_arity = 3);

}  // namespace lrc
