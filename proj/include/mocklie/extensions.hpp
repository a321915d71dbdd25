#pragma once

#include "mocklie/forms.hpp"

namespace mocklie {

// Anti-derivations of the given degree compatible with the form:
//   D(x*y) = -D(x)*y - (-1)^{deg |x|} x*D(y)
//   B(D(x), y) = (-1)^{deg |x|} B(x, D(y))
// Solved inside the anti-derivation space, so every member is verified.
std::vector<GradedLinearMap> ander_s(const PseudoEuclidean& p, Parity degree);

// Odd anti-derivation D with D^2 = 0 together with an even annihilator
// element x0 killed by D.
struct AdmissiblePair {
  GradedLinearMap d;
  Vec x0;
};

CheckReport check_admissible_pair(const SuperAlgebra& a, const AdmissiblePair& pair);

struct GeneralizedSemidirect {
  SuperAlgebra algebra;
  CheckReport report;  // mock-Lie verdicts of the result
};

// One-dimensional odd enlargement K u (+) J with
//   u*u = x0, u*x = D(x), x*u = (-1)^{|x|} D(x),
// products within J unchanged. Layout [J even | u, J odd]. The
// super-Jacobi identity holds for every admissible pair;
// supercommutativity fails exactly at (u, u) when x0 != 0, and the
// report states both verdicts. Throws std::invalid_argument when the
// pair is not admissible.
GeneralizedSemidirect generalized_semidirect(const SuperAlgebra& a, const AdmissiblePair& pair);

// Data for the generalized double extension of a pseudo-euclidean base:
// an admissible pair whose D is compatible with the form, an isotropic
// x0, and a scalar lambda.
struct GdextData {
  PseudoEuclidean base;
  GradedLinearMap d;
  Vec x0;
  Rational lambda;
};

// Admissible pair conditions plus B(x0, x0) = 0 and form compatibility
// of D, plus validity of the base structure.
CheckReport check_gdext_data(const GdextData& g);

struct GdextResult {
  PseudoEuclidean extension;
  CheckReport report;
};

// Generalized double extension on K u (+) J (+) K u*, u and u* odd,
// layout [J even | u, J odd, u*]:
//   u*u  = x0 + lambda u*
//   u*x  = D(x) - B(x0, x) u*
//   x*u  = (-1)^{|x|} (u*x)
//   x*y  = x*y + B(D(x), y) u*
//   u* annihilates everything.
// Form: B on J, Btilde(u, u*) = 1 = -Btilde(u*, u), u and u* isotropic
// and orthogonal to J. The report re-checks the mock-Lie axioms and all
// four form properties of the result; with (x0, lambda) = (0, 0) every
// entry passes, otherwise supercommutativity fails exactly at (u, u)
// with defect 2(x0 + lambda u*), evenness fails iff lambda != 0, and
// invariance fails at triples pairing u*u against u (supersymmetry of
// the stored gram forces Btilde(u*u, u) = -Btilde(u, u*u), so no gram
// convention can make a nonzero (x0, lambda) invariant). Throws
// std::invalid_argument when check_gdext_data fails.
GdextResult gdext(const GdextData& g);

// Layout of the gdext result relative to the base dims: block 0 is
// K u, block 1 the base, block 2 is K u*.
BlockLayout gdext_layout(const GradedDimension& base);

// Double extension input: pseudo-euclidean J1, mock-Lie J2 acting on J1
// by form-compatible anti-derivations phi[a], and a supersymmetric
// invariant (possibly degenerate) form sigma on J2.
struct DoubleExtensionInput {
  PseudoEuclidean j1;
  SuperAlgebra j2;
  std::vector<Matrix> phi;  // phi[a] has degree |e_a|
  BilinearForm sigma;
};

CheckReport check_double_extension_input(const DoubleExtensionInput& x);

struct CentralExtDual {
  SuperAlgebra algebra;   // J1 (+) J2*
  Representation action;  // extended action of J2 on the stage
  CheckReport report;     // representation identity + anti-derivation property
};

// Central stage on J1 (+) J2* with product
//   x*y = x *_1 y + phicheck(x, y),
//   phicheck(x, y)(a) = (-1)^{|x|(|y|+|a|)} B1(y, phi(a)(x)),
// J2* central, layout [J1 even, J2* even | J1 odd, J2* odd]; comes with
// the extended action phitilde(a)(x + f) = phi(a)(x) + L2*(a)(f), each
// phitilde(a) an anti-derivation of the stage, and the report verifying
// both claims. Throws std::invalid_argument when
// check_double_extension_input fails.
CentralExtDual central_ext_dual(const DoubleExtensionInput& x);

struct ActionSemidirect {
  SuperAlgebra algebra;
  CheckReport report;  // mock-Lie verdicts of the result
};

// Semidirect product on J1 (+) J2 with layout [J1 even, J2 even |
// J1 odd, J2 odd]: products within each summand unchanged,
// f_a * x = phi(a)(x), x * f_a = (-1)^{|x||f_a|} phi(a)(x). The report
// carries the mock-Lie verdicts of the result, so a phi(a) that is not
// an anti-derivation surfaces as a super_jacobi failure whose witness
// involves a. Throws std::invalid_argument on shape mismatches only.
ActionSemidirect action_semidirect(const SuperAlgebra& j1, const SuperAlgebra& j2,
                                   const std::vector<Matrix>& phi);

// Double extension on J2 (+) J1 (+) J2* with form B on J1, sigma on J2,
// Btilde(e_a*, e_b) = delta_ab, Btilde(e_a, e_b*) = (-1)^{|e_a|} delta_ab.
// Mock-Lie axioms and all four form properties of the result are
// re-verified; a violation throws std::logic_error. Throws
// std::invalid_argument when check_double_extension_input fails.
PseudoEuclidean double_extension(const DoubleExtensionInput& x);

BlockLayout double_extension_layout(const DoubleExtensionInput& x);

// One step of the inverse construction. new_basis lists, in P
// coordinates and in the layout order of gdext(data), the basis
// [J' even | u, J' odd, u*] against which the round trip is exact.
struct DecompositionStep {
  GdextData data;
  std::vector<Vec> new_basis;
  CheckReport report;
};

// Splits off one hyperbolic odd pair: u* is the first basis witness of
// Ann(J) in J_1, u solves Btilde(u, u*) = 1, J' = (K u + K u*)^perp,
// and D, x0, lambda are read off the products of u. The extracted data
// is re-validated and gdext(data) must reproduce P's products and form
// exactly on new_basis; any discrepancy throws std::logic_error.
// Throws std::invalid_argument with message "odd dimension <= 1",
// "no odd annihilator element", or "decompose requires a valid
// pseudo-euclidean structure".
DecompositionStep decompose(const PseudoEuclidean& p);

struct DecompositionTower {
  std::vector<DecompositionStep> steps;
  PseudoEuclidean residual;  // odd dimension 0 for valid input
};

// Applies decompose until the odd part is exhausted.
DecompositionTower iterate_decompose(const PseudoEuclidean& p);

// Witness for an isometry between two generalized double extensions of
// one common base: an isometry s of the base, an even annihilator
// element z0, and a nonzero scale alpha.
struct IsometryWitness {
  GradedLinearMap s;
  Vec z0;
  Rational alpha;
};

// Conditions for the witness to induce an isometry:
//   s is an even invertible homomorphism preserving B,
//   z0 lies in Ann(J) and is even,
//   alpha != 0,
//   alpha^3 lambda1 - lambda2 = B(z0, alpha^3 s(x1)),
//   s(x1) = (1/alpha^2) x2,
//   s o D1 o s^{-1} = (1/alpha) D2.
CheckReport check_isometry_conditions(const IsometryWitness& w, const GdextData& g1,
                                      const GdextData& g2);

// The induced map gdext(g1) -> gdext(g2):
//   Psi(u1)  = (1/alpha) u2 + z0 - (alpha/2) B(z0, z0) u2*
//   Psi(u1*) = alpha u2*
//   Psi(x)   = s(x) - alpha B(z0, s(x)) u2*
// Declared even; a nonzero z0 makes the matrix parity-mixing, which
// verify_isometry reports. Throws std::invalid_argument when alpha = 0
// or the bases disagree.
GradedLinearMap build_isometry(const IsometryWitness& w, const GdextData& g1,
                               const GdextData& g2);

// Three verdicts: even_invertible, homomorphism, form_preserved.
CheckReport verify_isometry(const GradedLinearMap& psi, const PseudoEuclidean& p1,
                            const PseudoEuclidean& p2);

}  // namespace mocklie
