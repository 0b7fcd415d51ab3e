#pragma once

#include <vector>

#include "lrc/foliation.hpp"
#include "lrc/linfty.hpp"

namespace lrc {

/// Sign conventions left open by the verbal definitions of sharp and R^sharp.
struct PresymplecticConventions {
  int sharp_sign = 1;        // sharp(du^a) = sharp_sign P^{ab} V_b
  Rational r_sharp_scale = 1;  // overall factor of i_{R#} lambda
  Rational op_prefactor = Rational(1, 2);  // factor in front of the S_k sum for arities >= 2
  // i_{R#} lambda acts as a graded Abar-linear map: (-)^{(|lambda|-1)|w|} relative to
  // inserting sharp(w) into R and the result into lambda.  That is omega_parity + cross_parity.
  bool lambda_parity = false;  // extra (-)^{|lambda|} in i_{R#} lambda
  bool omega_parity = true;    // extra (-)^{|w|} in (i_{R#} lambda)(w)
  bool cross_parity = true;    // extra (-)^{|lambda||w|}
};

/// A closed 2-form Omega = 1/2 Omega_ab du^a du^b whose coefficients depend on the u's only,
/// with constant nonzero determinant, and the inverse matrix P (Omega P = 1).
struct PresymplecticData {
  FoliationStructure F;
  Form omega;
  std::vector<std::vector<Polynomial>> omega_matrix;
  std::vector<std::vector<Polynomial>> inverse;
  PresymplecticConventions conv;

  /// Throws std::invalid_argument on leaf factors, leaf-coordinate dependence, dOmega != 0,
  /// or a determinant that is not a nonzero constant.
  static PresymplecticData validate(FoliationStructure F, const Form& omega, PresymplecticConventions conv = {});
};

/// sharp: Abar (x) CLambda^1 -> Q, and its inverse.
FormVector sharp(const PresymplecticData& D, const Form& w);
Form flat(const PresymplecticData& D, const FormVector& y);
/// <w1|w2>_Omega = <w1|sharp(w2)>.
Form omega_pairing(const PresymplecticData& D, const Form& w1, const Form& w2);
/// (i_{R#} lambda)(w), an endomorphism of Abar (x) CLambda^1.
Form r_sharp_action(const PresymplecticData& D, const Form& lambda, const Form& w);

/// {l_1..l_k}^op; arity 1 is dbar.  Degrees are shifted degrees (form degree - 1).
Form op_bracket(const PresymplecticData& D, const std::vector<Form>& ls, const std::vector<int>& deg);
/// X_k(l..) in Q, fixed by the anchor values {X_k(l..)|u^a} = {l.., u^a}^op.
FormVector hamiltonian_tower(const PresymplecticData& D, const std::vector<Form>& ls, const std::vector<int>& deg);

BracketOracle<Form> op_oracle(const PresymplecticData& D, int max_arity);
MorphismFamily<Form, FormVector> hamiltonian_family(const PresymplecticData& D, int max_arity);

/// Closedness, inverse, dbar P = 0, sharp/flat round trip, X_k landing in Q.
CheckReport presymplectic_data_check(const PresymplecticData& D, Rng& rng, std::size_t samples);
/// {Z_k|l'} = {l^k, l'}^op - c sum_{i+j=k} C(k,i) {Z_i, Z_j|l'} for even l and Z_k = X_k(l^k),
/// with the binary anchor of the foliation algebra.  c = 1/2 holds; c = 1 fails once the leaves have dimension 2.
CheckReport anchor_recursion_check(const PresymplecticData& D, Rng& rng, std::size_t samples, int max_k = 3,
                          const Rational& c = Rational(1, 2));
/// Morphism defect of the X family into the foliation algebra, arities 1..max_arity.
CheckReport kx_defect_check(const PresymplecticData& D, Rng& rng, std::size_t samples, int max_arity = 3);
/// Jacobiators of the op brackets, arities 1..max_arity; strict Jacobi of the binary bracket when flat.
CheckReport op_jacobiator_check(const PresymplecticData& D, Rng& rng, std::size_t samples, int max_arity = 5);

}  // namespace lrc
