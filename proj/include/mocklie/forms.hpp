#pragma once

#include "mocklie/representation.hpp"

namespace mocklie {

// Bilinear form via its gram matrix, gram(i, j) = B(e_i, e_j).
struct BilinearForm {
  GradedDimension dims;
  Matrix gram;

  Rational eval(const Vec& x, const Vec& y) const;
  bool is_even() const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

enum class FormProperty {
  even,                 // B(x, y) = 0 for x, y of opposite parity
  supersymmetric,       // B(x, y) = (-1)^{|x||y|} B(y, x)
  skew_supersymmetric,  // B(x, y) = -(-1)^{|x||y|} B(y, x)
  invariant,            // B(x*y, z) = B(x, y*z)
  nondegenerate,        // gram has full rank
};

std::string form_property_name(FormProperty p);

CheckReport check_form(const SuperAlgebra& a, const BilinearForm& b,
                       const std::vector<FormProperty>& props);

// Mock-Lie algebra carrying an even supersymmetric invariant
// nondegenerate form. The bundle itself does not enforce validity;
// check_pseudo_euclidean reports it.
struct PseudoEuclidean {
  SuperAlgebra algebra;
  BilinearForm form;
};

// Mock-Lie axioms plus the four form properties.
CheckReport check_pseudo_euclidean(const PseudoEuclidean& p);

// {x : B(x, s) = 0 for every basis vector s of S}.
Subspace orthogonal_complement(const PseudoEuclidean& p, const Subspace& s);

struct IdealPredicates {
  bool ideal = false;
  bool isotropic = false;      // B vanishes on S x S
  bool nondegenerate = false;  // B restricted to S has full rank
};

IdealPredicates ideal_predicates(const PseudoEuclidean& p, const Subspace& s);

// For an ideal I: its complement is graded, is an ideal, and products
// I * Iperp, Iperp * I vanish.
CheckReport check_perp_ideal_properties(const PseudoEuclidean& p, const Subspace& ideal);

// Ann(J) = (J*J)^perp as subspaces.
CheckReport check_ann_equals_square_perp(const PseudoEuclidean& p);

// dim J_1 is even, and J_1 != 0 forces Ann(J) to meet J_1 nontrivially;
// the witness vector appears in the entry note.
CheckReport check_odd_annihilator(const PseudoEuclidean& p);

// Form restricted to a subspace basis (gram of the basis vectors).
BilinearForm restrict_form(const BilinearForm& b, const Subspace& s);

struct TstarExtension {
  SuperAlgebra algebra;
  BilinearForm form;
  CheckReport report;
};

// Central extension of A by its coadjoint module shifted by W, on
// A (+) A* with layout [A even, A* even | A odd, A* odd], carrying the
// canonical hyperbolic form B(e_i*, e_j) = delta_ij,
// B(e_i, e_j*) = (-1)^{|e_i|} delta_ij, zero on A x A and A* x A*.
// The report covers the cocycle conditions, the four form properties,
// the cyclic evaluation condition
//   W(x,y)(z) = (-1)^{|x|(|y|+|z|)} W(y,z)(x)
// and the equivalence of that condition with invariance of the form.
// W takes values in dual coordinates (module dims equal to A's), and
// the zero cocycle is allowed.
TstarExtension tstar_extension(const SuperAlgebra& a, const Cocycle& w);

BlockLayout tstar_layout(const SuperAlgebra& a);

// x -> B(x, .) as an even map J -> J* in dual coordinates, verified to
// send the left multiplication action to its dual (and hence to be an
// invertible intertwiner between them). Throws std::invalid_argument
// unless p passes check_pseudo_euclidean.
GradedLinearMap flat_intertwiner(const PseudoEuclidean& p);

}  // namespace mocklie
