#pragma once

#include "mocklie/extensions.hpp"

namespace mocklie {

// Small named algebras used by the tests and the bundled fixture files.

SuperAlgebra make_abelian(GradedDimension dims, std::string name = "abelian");

// (2|0), e0*e0 = e1, everything else zero.
SuperAlgebra make_e2();

// make_e2 with the hyperbolic form B(e0, e1) = B(e1, e0) = 1.
PseudoEuclidean make_e2_hyperbolic();

// (1|2) Heisenberg-like algebra: z = e0 even, a = e1 and b = e2 odd,
// a*b = z = -b*a.
SuperAlgebra make_h3();

// (0|2) with e0*e0 = lambda e1. Supercommutative and super-Jacobi but
// not even unless lambda = 0.
SuperAlgebra make_g2(const Rational& lambda);

// Abelian (0|2) with the symplectic form B(e0, e1) = 1 = -B(e1, e0).
PseudoEuclidean make_s2();

// Abelian pseudo-euclidean space built from hyperbolic planes:
// even_pairs planes in the even part and odd_pairs symplectic planes in
// the odd part.
PseudoEuclidean make_abelian_pe(int even_pairs, int odd_pairs);

// (4|0) double extension of make_e2_hyperbolic by a one-dimensional
// abelian algebra acting by e0 -> e1. Basis order [a, e0, e1, a*] with
// a*e0 = e0*a = e1 and e0*e0 = e1 + a*.
PseudoEuclidean make_d4();

// (1|1) Grassmann algebra on one generator: unit e0, e0 odd generator
// e1 with e1*e1 = 0. Supercommutative and associative, for tensor
// products.
SuperAlgebra make_grassmann1();

}  // namespace mocklie
