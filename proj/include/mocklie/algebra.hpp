#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mocklie/graded.hpp"
#include "mocklie/report.hpp"
#include "mocklie/rng.hpp"

namespace mocklie {

// Finite-dimensional superalgebra over Q presented by structure
// constants on a homogeneous basis: e_i * e_j = sum_k c_{ij}^k e_k.
// Only nonzero products are stored; each value list is sorted by k and
// free of zero coefficients.
struct SuperAlgebra {
  std::string name;
  GradedDimension dims;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> products;

  int total() const { return dims.total(); }
  Parity parity(int i) const { return dims.parity(i); }

  Vec basis_product(int i, int j) const;
  void set_basis_product(int i, int j, const Vec& value);

  // Bilinear extension of the structure constants.
  Vec multiply(const Vec& x, const Vec& y) const;

  friend bool operator==(const SuperAlgebra&, const SuperAlgebra&) = default;
};

enum class Axiom {
  evenness,
  supercommutativity,
  super_jacobi,
  jordan_super,
  associativity,
};

std::string axiom_name(Axiom ax);

// evenness, supercommutativity, super_jacobi.
const std::vector<Axiom>& mock_lie_axioms();

// Scans basis tuples in lexicographic order; the witness of a failure
// is the first tuple with a nonzero defect.
CheckEntry check_axiom(const SuperAlgebra& a, Axiom ax);
CheckReport check_axioms(const SuperAlgebra& a, const std::vector<Axiom>& axioms);
CheckReport check_mock_lie(const SuperAlgebra& a);

// x*x*x on every basis vector and on `samples` seeded random even
// vectors (cubes of odd vectors vanish by supercommutativity of the
// square, so the sampled part draws even coordinates only).
CheckEntry check_cube_zero(const SuperAlgebra& a, int samples, uint64_t seed);

// (x*x)*(y*x) = ((x*x)*y)*x on basis pairs and seeded random
// homogeneous pairs; also reports whether both sides vanish identically
// over the same scan.
CheckReport check_squared_identity(const SuperAlgebra& a, int samples, uint64_t seed);

// Subspace of a graded ambient space, basis vectors in global
// coordinates. Bases produced by the operations below are parity
// homogeneous whenever the algebra has an even product.
struct Subspace {
  GradedDimension ambient;
  std::vector<Vec> basis;

  int dim() const { return (int)basis.size(); }
  bool is_graded() const;
  bool contains(const Vec& v) const { return in_span(basis, v); }
};

// Graded dimension of a subspace whose basis is parity homogeneous and
// ordered even-first. Throws std::logic_error otherwise.
GradedDimension subspace_graded_dims(const Subspace& s);

// {x : x * J = 0 and J * x = 0}.
Subspace annihilator(const SuperAlgebra& a);
// Ann(J) intersected with the odd part, computed over odd coordinates.
Subspace odd_annihilator(const SuperAlgebra& a);
// Span of all basis products (the ideal J * J).
Subspace square_ideal(const SuperAlgebra& a);
// {x in J_1 : x * J_1 = 0}.
Subspace compute_F(const SuperAlgebra& a);

bool is_ideal(const SuperAlgebra& a, const Subspace& s);

enum class DerivationKind { derivation, anti_derivation };

// Basis of the space of degree-homogeneous (anti)derivations:
//   D(x*y) = D(x)*y + (-1)^{deg |x|} x*D(y)   (derivation)
//   D(x*y) = -D(x)*y - (-1)^{deg |x|} x*D(y)  (anti-derivation)
// Unknowns range over the entries allowed by the declared degree, so
// every returned map respects its block structure by construction.
std::vector<GradedLinearMap> derivation_space(const SuperAlgebra& a, DerivationKind kind,
                                              Parity degree);

// Checks phi(x *_a y) = phi(x) *_b phi(y) on basis pairs. Throws
// std::invalid_argument when phi is not an even map between the two
// underlying spaces.
CheckReport check_homomorphism(const SuperAlgebra& a, const SuperAlgebra& b,
                               const GradedLinearMap& phi);

// Basis layout of the sum: [a even, b even | a odd, b odd].
SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b);
BlockLayout direct_sum_layout(const SuperAlgebra& a, const SuperAlgebra& b);

enum class KoszulMode { on, off };

// Tensor product of a mock-Lie superalgebra j with a supercommutative
// associative superalgebra a. Basis vectors are pairs (x_i, a_j),
// graded by |x_i| + |a_j|, laid out even block first with pairs in
// lexicographic (i, j) order inside each block. With KoszulMode::on the
// product carries the sign of moving a_j past x_k:
//   (x_i (x) a_j) * (x_k (x) a_l) = (-1)^{|a_j||x_k|} (x_i * x_k) (x) (a_j a_l)
// and with KoszulMode::off the sign is omitted (the literal unsigned
// product rule). Throws std::invalid_argument when j fails the mock-Lie
// axioms or a fails {supercommutativity, associativity, evenness}.
SuperAlgebra tensor_assoc(const SuperAlgebra& j, const SuperAlgebra& a, KoszulMode mode);

// Index of basis pair (i, j) in the tensor layout.
int tensor_index(const SuperAlgebra& j, const SuperAlgebra& a, int i, int jj);

}  // namespace mocklie
