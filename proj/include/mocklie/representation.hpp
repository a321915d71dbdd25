#pragma once

#include <optional>

#include "mocklie/algebra.hpp"

namespace mocklie {

// Linear action of a superalgebra on a graded module. action[i] is the
// matrix of pi(e_i) on module coordinates; its degree is the parity of
// e_i, which makes block sparsity of each pi(e_i) a checked property.
struct Representation {
  SuperAlgebra algebra;
  GradedDimension module;
  std::vector<Matrix> action;

  Parity op_parity(int i) const { return algebra.parity(i); }
  Vec act(int i, const Vec& v) const { return mat_vec(action[i], v); }
  // Linear extension in the algebra argument.
  Vec act(const Vec& x, const Vec& v) const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

// Verifies that each pi(e_i) respects the parity blocks of its degree
// and that pi(x*y) = -pi(x)pi(y) - (-1)^{|x||y|} pi(y)pi(x) holds on
// basis pairs. A failure witness (i, j, c) names the pair and the first
// module basis vector with a nonzero defect.
CheckReport check_representation(const Representation& r);

// Left multiplication x -> L_x on the algebra itself. Throws
// std::invalid_argument when a fails the mock-Lie axioms.
Representation adjoint(const SuperAlgebra& a);

// Dual action on functionals, pi*(x)(f) = (-1)^{|f||x|} f o pi(x), in
// the dual basis e_c* (parity of e_c* is the parity of e_c). Throws
// std::invalid_argument when r is not a valid representation.
Representation dual(const Representation& r);

Representation coadjoint(const SuperAlgebra& a);

// Split zero extension on A (+) V:
//   (x+u) * (y+v) = x*y + pi(x)v + (-1)^{|x||y|} pi(y)u
// with layout [A even, V even | A odd, V odd].
SuperAlgebra semidirect_product(const SuperAlgebra& a, const Representation& r);
BlockLayout semidirect_layout(const SuperAlgebra& a, const Representation& r);

struct IntertwinerSpace {
  std::vector<GradedLinearMap> basis;         // even maps with pi2(x) Phi = Phi pi1(x)
  std::optional<GradedLinearMap> witness;     // an invertible member, when found
};

// Solves for all even intertwiners between two representations of the
// same algebra. The witness search tries each basis map and then 32
// deterministic combinations sum_k t^k B_k for t = 1..32; absence of a
// witness is inconclusive, not a proof that none exists.
IntertwinerSpace intertwiner_space(const Representation& r1, const Representation& r2);

// Canonical even map V -> V** sending v to (-1)^{|v||f|} f(v). Returned
// map is verified to intertwine pi with its double dual.
GradedLinearMap double_dual_map(const Representation& r);

// Module-valued 2-form on the algebra, values in module coordinates.
struct Cocycle {
  GradedDimension algebra_dims;
  GradedDimension module;
  std::map<std::pair<int, int>, Vec> values;

  Vec value(int i, int j) const;
  Vec value(const Vec& x, const Vec& y) const;

  friend bool operator==(const Cocycle&, const Cocycle&) = default;
};

// Verifies supersymmetry W(x,y) = (-1)^{|x||y|} W(y,x) and the cyclic
// condition over basis triples (x,y,z):
//   sum over cyclic permutations of
//     (-1)^{|x||z|} [ W(x, y*z) + pi(x) W(y,z) ] = 0.
CheckReport check_cocycle(const SuperAlgebra& a, const Representation& r, const Cocycle& w);

// Semidirect product with the product on A shifted by W:
//   (x+u) * (y+v) = x*y + W(x,y) + pi(x)v + (-1)^{|x||y|} pi(y)u.
SuperAlgebra central_extension(const SuperAlgebra& a, const Representation& r, const Cocycle& w);

}  // namespace mocklie
