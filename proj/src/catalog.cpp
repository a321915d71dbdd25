#include "mocklie/catalog.hpp"

#include <stdexcept>

namespace mocklie {

SuperAlgebra make_abelian(GradedDimension dims, std::string name) {
  SuperAlgebra a;
  a.name = std::move(name);
  a.dims = dims;
  return a;
}

SuperAlgebra make_e2() {
  SuperAlgebra a = make_abelian({2, 0}, "e2");
  a.set_basis_product(0, 0, {Rational(0), Rational(1)});
  return a;
}

PseudoEuclidean make_e2_hyperbolic() {
  PseudoEuclidean p;
  p.algebra = make_e2();
  p.form.dims = p.algebra.dims;
  p.form.gram = Matrix(2, 2);
  p.form.gram.at(0, 1) = 1;
  p.form.gram.at(1, 0) = 1;
  return p;
}

SuperAlgebra make_h3() {
  SuperAlgebra a = make_abelian({1, 2}, "h3");
  a.set_basis_product(1, 2, {Rational(1), Rational(0), Rational(0)});
  a.set_basis_product(2, 1, {Rational(-1), Rational(0), Rational(0)});
  return a;
}

SuperAlgebra make_g2(const Rational& lambda) {
  SuperAlgebra a = make_abelian({0, 2}, "g2");
  a.set_basis_product(0, 0, {Rational(0), lambda});
  return a;
}

PseudoEuclidean make_s2() {
  PseudoEuclidean p;
  p.algebra = make_abelian({0, 2}, "s2");
  p.form.dims = p.algebra.dims;
  p.form.gram = Matrix(2, 2);
  p.form.gram.at(0, 1) = 1;
  p.form.gram.at(1, 0) = -1;
  return p;
}

PseudoEuclidean make_abelian_pe(int even_pairs, int odd_pairs) {
  if (even_pairs < 0 || odd_pairs < 0)
    throw std::invalid_argument("pair counts must be nonnegative");
  PseudoEuclidean p;
  p.algebra = make_abelian({2 * even_pairs, 2 * odd_pairs});
  int n = p.algebra.total();
  p.form.dims = p.algebra.dims;
  p.form.gram = Matrix(n, n);
  for (int k = 0; k < even_pairs; ++k) {
    p.form.gram.at(2 * k, 2 * k + 1) = 1;
    p.form.gram.at(2 * k + 1, 2 * k) = 1;
  }
  int base = 2 * even_pairs;
  for (int k = 0; k < odd_pairs; ++k) {
    p.form.gram.at(base + 2 * k, base + 2 * k + 1) = 1;
    p.form.gram.at(base + 2 * k + 1, base + 2 * k) = -1;
  }
  return p;
}

PseudoEuclidean make_d4() {
  DoubleExtensionInput in;
  in.j1 = make_e2_hyperbolic();
  in.j2 = make_abelian({1, 0}, "k1");
  Matrix op(2, 2);
  op.at(1, 0) = 1;
  in.phi = {op};
  in.sigma.dims = in.j2.dims;
  in.sigma.gram = Matrix(1, 1);
  PseudoEuclidean ext = double_extension(in);
  ext.algebra.name = "d4";
  return ext;
}

SuperAlgebra make_grassmann1() {
  SuperAlgebra a = make_abelian({1, 1}, "grassmann1");
  a.set_basis_product(0, 0, {Rational(1), Rational(0)});
  a.set_basis_product(0, 1, {Rational(0), Rational(1)});
  a.set_basis_product(1, 0, {Rational(0), Rational(1)});
  return a;
}

}  // namespace mocklie
