#include "mocklie/forms.hpp"

#include <stdexcept>

namespace mocklie {

Rational BilinearForm::eval(const Vec& x, const Vec& y) const {
  if ((int)x.size() != dims.total() || (int)y.size() != dims.total())
    throw std::invalid_argument("vector size mismatch");
  Rational r(0);
  for (int i = 0; i < gram.rows; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < gram.cols; ++j)
      if (!gram.at(i, j).is_zero()) r += x[i] * gram.at(i, j) * y[j];
  }
  return r;
}

bool BilinearForm::is_even() const {
  for (int i = 0; i < dims.total(); ++i)
    for (int j = 0; j < dims.total(); ++j)
      if (dims.parity(i) != dims.parity(j) && !gram.at(i, j).is_zero()) return false;
  return true;
}

std::string form_property_name(FormProperty p) {
  switch (p) {
    case FormProperty::even: return "form_even";
    case FormProperty::supersymmetric: return "form_supersymmetric";
    case FormProperty::skew_supersymmetric: return "form_skew_supersymmetric";
    case FormProperty::invariant: return "form_invariant";
    case FormProperty::nondegenerate: return "form_nondegenerate";
  }
  throw std::logic_error("unknown form property");
}

CheckReport check_form(const SuperAlgebra& a, const BilinearForm& b,
                       const std::vector<FormProperty>& props) {
  if (b.dims != a.dims) throw std::invalid_argument("form dimension mismatch");
  CheckReport rep;
  int t = a.total();
  for (FormProperty p : props) {
    std::string name = form_property_name(p);
    CheckEntry entry{name, true, {}, {}, ""};
    switch (p) {
      case FormProperty::even:
        for (int i = 0; i < t && entry.pass; ++i)
          for (int j = 0; j < t && entry.pass; ++j)
            if (a.parity(i) != a.parity(j) && !b.gram.at(i, j).is_zero())
              entry = {name, false, {i, j}, {b.gram.at(i, j)}, ""};
        break;
      case FormProperty::supersymmetric:
      case FormProperty::skew_supersymmetric: {
        Rational flip(p == FormProperty::supersymmetric ? 1 : -1);
        for (int i = 0; i < t && entry.pass; ++i)
          for (int j = 0; j < t && entry.pass; ++j) {
            Rational d = b.gram.at(i, j) -
                         flip * Rational(koszul_sign(a.parity(i), a.parity(j))) * b.gram.at(j, i);
            if (!d.is_zero()) entry = {name, false, {i, j}, {d}, ""};
          }
        break;
      }
      case FormProperty::invariant:
        for (int i = 0; i < t && entry.pass; ++i)
          for (int j = 0; j < t && entry.pass; ++j)
            for (int k = 0; k < t && entry.pass; ++k) {
              Rational d = b.eval(a.basis_product(i, j), basis_vec(t, k)) -
                           b.eval(basis_vec(t, i), a.basis_product(j, k));
              if (!d.is_zero()) entry = {name, false, {i, j, k}, {d}, ""};
            }
        break;
      case FormProperty::nondegenerate: {
        int r = rank(b.gram);
        if (r != t)
          entry = {name, false, {}, {}, "gram rank " + std::to_string(r) + " of " +
                                            std::to_string(t)};
        break;
      }
    }
    rep.add(entry);
  }
  return rep;
}

CheckReport check_pseudo_euclidean(const PseudoEuclidean& p) {
  CheckReport rep = check_mock_lie(p.algebra);
  rep.merge(check_form(p.algebra, p.form,
                       {FormProperty::even, FormProperty::supersymmetric, FormProperty::invariant,
                        FormProperty::nondegenerate}));
  return rep;
}

Subspace orthogonal_complement(const PseudoEuclidean& p, const Subspace& s) {
  int t = p.algebra.total();
  std::vector<Vec> rows;
  for (const Vec& u : s.basis) {
    // B(x, u) = sum_i x_i (G u)_i, one linear constraint on x
    Vec row(t);
    for (int i = 0; i < t; ++i) row[i] = p.form.eval(basis_vec(t, i), u);
    rows.push_back(std::move(row));
  }
  Matrix system = rows.empty() ? Matrix(0, t) : Matrix::from_rows(rows, t);
  return {p.algebra.dims, nullspace(system)};
}

IdealPredicates ideal_predicates(const PseudoEuclidean& p, const Subspace& s) {
  IdealPredicates out;
  out.ideal = is_ideal(p.algebra, s);
  out.isotropic = true;
  int d = s.dim();
  Matrix restricted(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      restricted.at(i, j) = p.form.eval(s.basis[i], s.basis[j]);
      if (!restricted.at(i, j).is_zero()) out.isotropic = false;
    }
  out.nondegenerate = rank(restricted) == d;
  return out;
}

CheckReport check_perp_ideal_properties(const PseudoEuclidean& p, const Subspace& ideal) {
  CheckReport rep;
  Subspace perp = orthogonal_complement(p, ideal);

  if (perp.is_graded())
    rep.add_pass("perp_graded");
  else
    rep.add_fail("perp_graded", {}, {}, "complement basis mixes parities");

  if (is_ideal(p.algebra, perp))
    rep.add_pass("perp_is_ideal");
  else
    rep.add_fail("perp_is_ideal", {}, {}, "complement is not an ideal");

  CheckEntry prod{"product_with_perp_vanishes", true, {}, {}, ""};
  for (int i = 0; i < ideal.dim() && prod.pass; ++i)
    for (int j = 0; j < perp.dim() && prod.pass; ++j) {
      Vec left = p.algebra.multiply(ideal.basis[i], perp.basis[j]);
      Vec right = p.algebra.multiply(perp.basis[j], ideal.basis[i]);
      if (!is_zero(left))
        prod = {"product_with_perp_vanishes", false, {i, j}, left,
                "ideal basis " + std::to_string(i) + " times complement basis " + std::to_string(j)};
      else if (!is_zero(right))
        prod = {"product_with_perp_vanishes", false, {j, i}, right,
                "complement basis " + std::to_string(j) + " times ideal basis " + std::to_string(i)};
    }
  rep.add(prod);
  return rep;
}

CheckReport check_ann_equals_square_perp(const PseudoEuclidean& p) {
  CheckReport rep;
  Subspace ann = annihilator(p.algebra);
  Subspace sq = square_ideal(p.algebra);
  Subspace perp = orthogonal_complement(p, sq);
  CheckEntry entry{"annihilator_equals_square_perp", true, {}, {},
                   "dim Ann = " + std::to_string(ann.dim()) +
                       ", dim (J*J)perp = " + std::to_string(perp.dim())};
  for (const Vec& v : ann.basis)
    if (!perp.contains(v)) {
      entry = {"annihilator_equals_square_perp", false, {}, v,
               "annihilator vector outside (J*J)perp"};
      break;
    }
  if (entry.pass)
    for (const Vec& v : perp.basis)
      if (!ann.contains(v)) {
        entry = {"annihilator_equals_square_perp", false, {}, v,
                 "(J*J)perp vector outside the annihilator"};
        break;
      }
  rep.add(entry);
  return rep;
}

CheckReport check_odd_annihilator(const PseudoEuclidean& p) {
  CheckReport rep;
  int n = p.algebra.dims.odd;
  if (n % 2 == 0)
    rep.add_pass("odd_dimension_even", "dim J_1 = " + std::to_string(n));
  else
    rep.add_fail("odd_dimension_even", {}, {}, "dim J_1 = " + std::to_string(n));
  if (n == 0) {
    rep.add_pass("odd_annihilator_nonzero", "vacuous, J_1 = 0");
    return rep;
  }
  Subspace oann = odd_annihilator(p.algebra);
  if (oann.dim() > 0)
    rep.add_pass("odd_annihilator_nonzero", "witness " + vec_str(oann.basis[0]));
  else
    rep.add_fail("odd_annihilator_nonzero", {}, {}, "Ann(J) meets J_1 only in 0");
  return rep;
}

BilinearForm restrict_form(const BilinearForm& b, const Subspace& s) {
  BilinearForm r;
  r.dims = subspace_graded_dims(s);
  r.gram = Matrix(s.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) r.gram.at(i, j) = b.eval(s.basis[i], s.basis[j]);
  return r;
}

BlockLayout tstar_layout(const SuperAlgebra& a) { return BlockLayout({a.dims, a.dims}); }

TstarExtension tstar_extension(const SuperAlgebra& a, const Cocycle& w) {
  if (w.algebra_dims != a.dims || w.module != a.dims)
    throw std::invalid_argument("cocycle dimension mismatch");
  Representation coad = coadjoint(a);
  TstarExtension out;
  out.report = check_cocycle(a, coad, w);
  out.algebra = central_extension(a, coad, w);
  out.algebra.name = "tstar(" + a.name + ")";

  BlockLayout layout = tstar_layout(a);
  int t = a.total();
  out.form.dims = out.algebra.dims;
  out.form.gram = Matrix(2 * t, 2 * t);
  for (int i = 0; i < t; ++i) {
    out.form.gram.at(layout.global_index(1, i), layout.global_index(0, i)) = Rational(1);
    out.form.gram.at(layout.global_index(0, i), layout.global_index(1, i)) =
        Rational(a.parity(i) == Parity::odd ? -1 : 1);
  }

  CheckReport form_rep =
      check_form(out.algebra, out.form,
                 {FormProperty::even, FormProperty::supersymmetric, FormProperty::invariant,
                  FormProperty::nondegenerate});
  out.report.merge(form_rep);

  // W(x,y)(z) = (-1)^{|x|(|y|+|z|)} W(y,z)(x) over basis triples
  CheckEntry cyc{"supercyclic_values", true, {}, {}, ""};
  for (int i = 0; i < t && cyc.pass; ++i)
    for (int j = 0; j < t && cyc.pass; ++j)
      for (int k = 0; k < t && cyc.pass; ++k) {
        int sign = a.parity(i) == Parity::odd &&
                           parity_sum(a.parity(j), a.parity(k)) == Parity::odd
                       ? -1
                       : 1;
        Rational d = w.value(i, j)[k] - Rational(sign) * w.value(j, k)[i];
        if (!d.is_zero()) cyc = {"supercyclic_values", false, {i, j, k}, {d}, ""};
      }
  out.report.add(cyc);

  bool invariant = form_rep.passed("form_invariant");
  if (invariant == cyc.pass)
    out.report.add_pass("invariance_iff_supercyclic");
  else
    out.report.add_fail("invariance_iff_supercyclic", {}, {},
                        invariant ? "form invariant but values not supercyclic"
                                  : "values supercyclic but form not invariant");
  return out;
}

GradedLinearMap flat_intertwiner(const PseudoEuclidean& p) {
  if (!check_pseudo_euclidean(p).all_pass())
    throw std::invalid_argument("flat map requires a pseudo-euclidean structure");
  int t = p.algebra.total();
  GradedLinearMap flat(p.algebra.dims, p.algebra.dims, Parity::even);
  // flat(e_i) = sum_j B(e_i, e_j) e_j*
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) flat.mat.at(j, i) = p.form.gram.at(i, j);
  if (!flat.respects_degree()) throw std::logic_error("flat map is not even");
  if (rank(flat.mat) != t) throw std::logic_error("flat map is not invertible");
  Representation ad = adjoint(p.algebra);
  Representation coad = dual(ad);
  for (int i = 0; i < t; ++i) {
    Matrix lhs = mat_mul(coad.action[i], flat.mat);
    Matrix rhs = mat_mul(flat.mat, ad.action[i]);
    if (!(lhs == rhs)) throw std::logic_error("flat map fails to intertwine");
  }
  return flat;
}

}  // namespace mocklie
