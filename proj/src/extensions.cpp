#include "mocklie/extensions.hpp"

#include <stdexcept>
#include <utility>

namespace mocklie {

namespace {

int anti_sign(Parity degree, Parity x) {
  return degree == Parity::odd && x == Parity::odd ? -1 : 1;
}

void set_col(Matrix& m, int j, const Vec& v) {
  for (int i = 0; i < m.rows; ++i) m.at(i, j) = v[i];
}

// Defect of the anti-derivation identity on the pair (i, j); zero means
// d(e_i e_j) = -d(e_i) e_j - (-1)^{deg |e_i|} e_i d(e_j).
Vec anti_derivation_defect(const SuperAlgebra& a, const Matrix& d, Parity degree, int i, int j) {
  Vec lhs = mat_vec(d, a.basis_product(i, j));
  Vec rhs = a.multiply(d.col(i), basis_vec(a.total(), j));
  Vec mixed = a.multiply(basis_vec(a.total(), i), d.col(j));
  return lhs + rhs + Rational(anti_sign(degree, a.parity(i))) * mixed;
}

void throw_first_failure(const CheckReport& rep, const std::string& prefix) {
  for (const auto& e : rep.entries)
    if (!e.pass) throw std::invalid_argument(prefix + e.check);
}

}  // namespace

std::vector<GradedLinearMap> ander_s(const PseudoEuclidean& p, Parity degree) {
  const SuperAlgebra& a = p.algebra;
  const int n = a.total();

  std::vector<std::pair<int, int>> slots;
  std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (a.parity(r) == parity_sum(a.parity(c), degree)) {
        slot_of[r][c] = (int)slots.size();
        slots.push_back({r, c});
      }
  const int unknowns = (int)slots.size();

  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational sgn(anti_sign(degree, a.parity(i)));
      // d(e_i e_j) + d(e_i) e_j + (-1)^{deg |e_i|} e_i d(e_j) = 0, one
      // row per target coordinate k.
      std::vector<Vec> coeff(n, zero_vec(unknowns));
      Vec pij = a.basis_product(i, j);
      for (int m = 0; m < n; ++m)
        if (!pij[m].is_zero())
          for (int k = 0; k < n; ++k)
            if (slot_of[k][m] >= 0) coeff[k][slot_of[k][m]] += pij[m];
      for (int r = 0; r < n; ++r) {
        if (slot_of[r][i] >= 0) {
          Vec prj = a.basis_product(r, j);
          for (int k = 0; k < n; ++k)
            if (!prj[k].is_zero()) coeff[k][slot_of[r][i]] += prj[k];
        }
        if (slot_of[r][j] >= 0) {
          Vec pir = a.basis_product(i, r);
          for (int k = 0; k < n; ++k)
            if (!pir[k].is_zero()) coeff[k][slot_of[r][j]] += sgn * pir[k];
        }
      }
      for (Vec& row : coeff)
        if (!is_zero(row)) rows.push_back(std::move(row));
      // B(d(e_i), e_j) - (-1)^{deg |e_i|} B(e_i, d(e_j)) = 0.
      Vec frow = zero_vec(unknowns);
      for (int r = 0; r < n; ++r) {
        if (slot_of[r][i] >= 0) frow[slot_of[r][i]] += p.form.gram.at(r, j);
        if (slot_of[r][j] >= 0) frow[slot_of[r][j]] -= sgn * p.form.gram.at(i, r);
      }
      if (!is_zero(frow)) rows.push_back(std::move(frow));
    }

  std::vector<GradedLinearMap> out;
  for (const Vec& sol : nullspace(Matrix::from_rows(rows, unknowns))) {
    GradedLinearMap d(a.dims, a.dims, degree);
    for (int t = 0; t < unknowns; ++t) d.mat.at(slots[t].first, slots[t].second) = sol[t];
    out.push_back(std::move(d));
  }
  for (const GradedLinearMap& d : out) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rational sgn(anti_sign(degree, a.parity(i)));
        if (!is_zero(anti_derivation_defect(a, d.mat, degree, i, j)) ||
            p.form.eval(d.mat.col(i), basis_vec(n, j)) !=
                sgn * p.form.eval(basis_vec(n, i), d.mat.col(j)))
          throw std::logic_error("anti-derivation solver self-check failed");
      }
  }
  return out;
}

CheckReport check_admissible_pair(const SuperAlgebra& a, const AdmissiblePair& pair) {
  const int n = a.total();
  const GradedLinearMap& d = pair.d;
  if (d.source != a.dims || d.target != a.dims || d.mat.rows != n || d.mat.cols != n ||
      (int)pair.x0.size() != n)
    throw std::invalid_argument("admissible pair dimension mismatch");

  CheckReport rep;

  if (d.degree != Parity::odd) {
    rep.add_fail("d_odd_anti_derivation", {}, {}, "declared degree is even");
  } else if (!d.respects_degree()) {
    rep.add_fail("d_odd_anti_derivation", d.degree_violation(), {}, "entry outside the odd blocks");
  } else {
    CheckEntry e{"d_odd_anti_derivation"};
    for (int i = 0; i < n && e.pass; ++i)
      for (int j = 0; j < n; ++j) {
        Vec defect = anti_derivation_defect(a, d.mat, Parity::odd, i, j);
        if (!is_zero(defect)) {
          e.pass = false;
          e.witness = {i, j};
          e.defect = std::move(defect);
          break;
        }
      }
    rep.add(std::move(e));
  }

  {
    CheckEntry e{"d_squares_to_zero"};
    for (int i = 0; i < n; ++i) {
      Vec v = d.apply(d.apply(basis_vec(n, i)));
      if (!is_zero(v)) {
        e.pass = false;
        e.witness = {i};
        e.defect = std::move(v);
        break;
      }
    }
    rep.add(std::move(e));
  }

  {
    CheckEntry e{"x0_even_annihilator"};
    for (int k = a.dims.even; k < n && e.pass; ++k)
      if (!pair.x0[k].is_zero()) {
        e.pass = false;
        e.witness = {k};
        e.defect = {pair.x0[k]};
        e.note = "x0 has an odd component";
      }
    for (int j = 0; j < n && e.pass; ++j) {
      Vec left = a.multiply(pair.x0, basis_vec(n, j));
      Vec right = a.multiply(basis_vec(n, j), pair.x0);
      if (!is_zero(left) || !is_zero(right)) {
        e.pass = false;
        e.witness = {j};
        e.defect = is_zero(left) ? std::move(right) : std::move(left);
        e.note = "x0 * e_j or e_j * x0 is nonzero";
      }
    }
    rep.add(std::move(e));
  }

  {
    Vec v = d.apply(pair.x0);
    if (is_zero(v))
      rep.add_pass("d_kills_x0");
    else
      rep.add_fail("d_kills_x0", {}, std::move(v));
  }

  return rep;
}

GeneralizedSemidirect generalized_semidirect(const SuperAlgebra& a, const AdmissiblePair& pair) {
  CheckReport pre = check_admissible_pair(a, pair);
  if (!pre.all_pass())
    throw_first_failure(pre, "generalized semidirect product requires an admissible pair: ");

  const int n = a.total();
  BlockLayout layout({GradedDimension{0, 1}, a.dims});
  const int iu = layout.global_index(0, 0);

  SuperAlgebra s;
  s.name = "gsd(" + a.name + ")";
  s.dims = layout.dims();
  s.set_basis_product(iu, iu, layout.embed(1, pair.x0));
  for (int i = 0; i < n; ++i) {
    const int gi = layout.global_index(1, i);
    Vec di = layout.embed(1, pair.d.mat.col(i));
    s.set_basis_product(gi, iu, Rational(a.parity(i) == Parity::odd ? -1 : 1) * di);
    s.set_basis_product(iu, gi, std::move(di));
    for (int j = 0; j < n; ++j)
      s.set_basis_product(gi, layout.global_index(1, j), layout.embed(1, a.basis_product(i, j)));
  }
  CheckReport rep = check_mock_lie(s);
  return {std::move(s), std::move(rep)};
}

CheckReport check_gdext_data(const GdextData& g) {
  const SuperAlgebra& base = g.base.algebra;
  const int n = base.total();

  CheckReport rep;
  rep.merge(check_pseudo_euclidean(g.base), "base_");
  rep.merge(check_admissible_pair(base, {g.d, g.x0}));

  CheckEntry compat{"d_form_compatible"};
  for (int i = 0; i < n && compat.pass; ++i)
    for (int j = 0; j < n; ++j) {
      Rational lhs = g.base.form.eval(g.d.mat.col(i), basis_vec(n, j));
      Rational rhs = g.base.form.eval(basis_vec(n, i), g.d.mat.col(j));
      if (base.parity(i) == Parity::odd) rhs = -rhs;
      if (lhs != rhs) {
        compat.pass = false;
        compat.witness = {i, j};
        compat.defect = {lhs - rhs};
        break;
      }
    }
  rep.add(std::move(compat));

  Rational iso = g.base.form.eval(g.x0, g.x0);
  if (iso.is_zero())
    rep.add_pass("x0_isotropic");
  else
    rep.add_fail("x0_isotropic", {}, {iso});

  return rep;
}

BlockLayout gdext_layout(const GradedDimension& base) {
  return BlockLayout({GradedDimension{0, 1}, base, GradedDimension{0, 1}});
}

namespace {

// Assembles the extension from the table without validating g; public
// gdext() validates first, decompose() reuses this for the round trip.
PseudoEuclidean gdext_build(const GdextData& g) {
  const SuperAlgebra& base = g.base.algebra;
  const int n = base.total();
  BlockLayout layout = gdext_layout(base.dims);
  const int total = layout.dims().total();
  const int iu = layout.global_index(0, 0);
  const int ius = layout.global_index(2, 0);

  SuperAlgebra s;
  s.name = "gdext(" + base.name + ")";
  s.dims = layout.dims();

  Vec uu = layout.embed(1, g.x0);
  uu[ius] += g.lambda;
  s.set_basis_product(iu, iu, std::move(uu));

  for (int i = 0; i < n; ++i) {
    const int gi = layout.global_index(1, i);
    Vec ux = layout.embed(1, g.d.mat.col(i));
    ux[ius] -= g.base.form.eval(g.x0, basis_vec(n, i));
    s.set_basis_product(gi, iu, Rational(base.parity(i) == Parity::odd ? -1 : 1) * ux);
    s.set_basis_product(iu, gi, std::move(ux));
    for (int j = 0; j < n; ++j) {
      Vec xy = layout.embed(1, base.basis_product(i, j));
      xy[ius] += g.base.form.eval(g.d.mat.col(i), basis_vec(n, j));
      s.set_basis_product(gi, layout.global_index(1, j), std::move(xy));
    }
  }

  BilinearForm bt{layout.dims(), Matrix(total, total)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      bt.gram.at(layout.global_index(1, i), layout.global_index(1, j)) = g.base.form.gram.at(i, j);
  bt.gram.at(iu, ius) = Rational(1);
  bt.gram.at(ius, iu) = Rational(-1);

  return {std::move(s), std::move(bt)};
}

}  // namespace

GdextResult gdext(const GdextData& g) {
  CheckReport pre = check_gdext_data(g);
  if (!pre.all_pass()) throw_first_failure(pre, "gdext data invalid: ");
  PseudoEuclidean ext = gdext_build(g);
  CheckReport rep = check_pseudo_euclidean(ext);
  return {std::move(ext), std::move(rep)};
}

CheckReport check_double_extension_input(const DoubleExtensionInput& x) {
  const int n1 = x.j1.algebra.total();
  const int m = x.j2.total();
  if ((int)x.phi.size() != m)
    throw std::invalid_argument("phi must provide one operator per basis vector of the acting algebra");
  for (const Matrix& op : x.phi)
    if (op.rows != n1 || op.cols != n1) throw std::invalid_argument("phi operator has wrong shape");
  if (x.sigma.dims != x.j2.dims || x.sigma.gram.rows != m || x.sigma.gram.cols != m)
    throw std::invalid_argument("sigma dimension mismatch");

  CheckReport rep;
  rep.merge(check_pseudo_euclidean(x.j1), "j1_");
  rep.merge(check_mock_lie(x.j2), "j2_");
  rep.merge(check_representation({x.j2, x.j1.algebra.dims, x.phi}), "phi_");

  CheckEntry anti{"phi_anti_derivation"};
  for (int a = 0; a < m && anti.pass; ++a)
    for (int i = 0; i < n1 && anti.pass; ++i)
      for (int j = 0; j < n1; ++j) {
        Vec defect = anti_derivation_defect(x.j1.algebra, x.phi[a], x.j2.parity(a), i, j);
        if (!is_zero(defect)) {
          anti.pass = false;
          anti.witness = {a, i, j};
          anti.defect = std::move(defect);
          break;
        }
      }
  rep.add(std::move(anti));

  CheckEntry compat{"phi_form_compatible"};
  for (int a = 0; a < m && compat.pass; ++a)
    for (int i = 0; i < n1 && compat.pass; ++i)
      for (int j = 0; j < n1; ++j) {
        Rational lhs = x.j1.form.eval(x.phi[a].col(i), basis_vec(n1, j));
        Rational rhs = x.j1.form.eval(basis_vec(n1, i), x.phi[a].col(j));
        if (x.j2.parity(a) == Parity::odd && x.j1.algebra.parity(i) == Parity::odd) rhs = -rhs;
        if (lhs != rhs) {
          compat.pass = false;
          compat.witness = {a, i, j};
          compat.defect = {lhs - rhs};
          break;
        }
      }
  rep.add(std::move(compat));

  rep.merge(check_form(x.j2, x.sigma,
                       {FormProperty::even, FormProperty::supersymmetric, FormProperty::invariant}),
            "sigma_");
  return rep;
}

namespace {

// phicheck(x, y) of the central stage in J2* coordinates:
// phicheck(e_i, e_j)(a) = (-1)^{|e_i|(|e_j|+|a|)} B1(e_j, phi(a)(e_i)).
Vec phicheck_value(const DoubleExtensionInput& x, int i, int j) {
  const int n1 = x.j1.algebra.total();
  const int m = x.j2.total();
  Vec w = zero_vec(m);
  for (int a = 0; a < m; ++a) {
    Rational val = x.j1.form.eval(basis_vec(n1, j), x.phi[a].col(i));
    if (x.j1.algebra.parity(i) == Parity::odd &&
        parity_sum(x.j1.algebra.parity(j), x.j2.parity(a)) == Parity::odd)
      val = -val;
    w[a] = val;
  }
  return w;
}

}  // namespace

CentralExtDual central_ext_dual(const DoubleExtensionInput& x) {
  CheckReport pre = check_double_extension_input(x);
  if (!pre.all_pass()) throw_first_failure(pre, "double extension input invalid: ");

  const SuperAlgebra& j1 = x.j1.algebra;
  const int n1 = j1.total();
  const int m = x.j2.total();
  BlockLayout layout({j1.dims, x.j2.dims});
  const int total = layout.dims().total();

  SuperAlgebra s;
  s.name = "ced(" + j1.name + "," + x.j2.name + ")";
  s.dims = layout.dims();
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      s.set_basis_product(layout.global_index(0, i), layout.global_index(0, j),
                          layout.embed(0, j1.basis_product(i, j)) +
                              layout.embed(1, phicheck_value(x, i, j)));

  Representation coad = coadjoint(x.j2);
  Representation act{x.j2, layout.dims(), {}};
  for (int a = 0; a < m; ++a) {
    Matrix op(total, total);
    for (int i = 0; i < n1; ++i)
      set_col(op, layout.global_index(0, i), layout.embed(0, x.phi[a].col(i)));
    for (int c = 0; c < m; ++c)
      set_col(op, layout.global_index(1, c), layout.embed(1, coad.action[a].col(c)));
    act.action.push_back(std::move(op));
  }

  CheckReport rep = check_representation(act);
  CheckEntry anti{"action_anti_derivation"};
  for (int a = 0; a < m && anti.pass; ++a)
    for (int i = 0; i < total && anti.pass; ++i)
      for (int j = 0; j < total; ++j) {
        Vec defect = anti_derivation_defect(s, act.action[a], x.j2.parity(a), i, j);
        if (!is_zero(defect)) {
          anti.pass = false;
          anti.witness = {a, i, j};
          anti.defect = std::move(defect);
          break;
        }
      }
  rep.add(std::move(anti));

  return {std::move(s), std::move(act), std::move(rep)};
}

ActionSemidirect action_semidirect(const SuperAlgebra& j1, const SuperAlgebra& j2,
                                   const std::vector<Matrix>& phi) {
  const int n1 = j1.total();
  const int m = j2.total();
  if ((int)phi.size() != m)
    throw std::invalid_argument("phi must provide one operator per basis vector of the acting algebra");
  for (const Matrix& op : phi)
    if (op.rows != n1 || op.cols != n1) throw std::invalid_argument("phi operator has wrong shape");

  BlockLayout layout({j1.dims, j2.dims});
  SuperAlgebra s;
  s.name = "asd(" + j1.name + "," + j2.name + ")";
  s.dims = layout.dims();
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      s.set_basis_product(layout.global_index(0, i), layout.global_index(0, j),
                          layout.embed(0, j1.basis_product(i, j)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      s.set_basis_product(layout.global_index(1, a), layout.global_index(1, b),
                          layout.embed(1, j2.basis_product(a, b)));
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < n1; ++i) {
      Vec v = layout.embed(0, phi[a].col(i));
      s.set_basis_product(layout.global_index(0, i), layout.global_index(1, a),
                          Rational(koszul_sign(j1.parity(i), j2.parity(a))) * v);
      s.set_basis_product(layout.global_index(1, a), layout.global_index(0, i), std::move(v));
    }
  CheckReport rep = check_mock_lie(s);
  return {std::move(s), std::move(rep)};
}

BlockLayout double_extension_layout(const DoubleExtensionInput& x) {
  return BlockLayout({x.j2.dims, x.j1.algebra.dims, x.j2.dims});
}

PseudoEuclidean double_extension(const DoubleExtensionInput& x) {
  CheckReport pre = check_double_extension_input(x);
  if (!pre.all_pass()) throw_first_failure(pre, "double extension input invalid: ");

  const SuperAlgebra& j1 = x.j1.algebra;
  const int n1 = j1.total();
  const int m = x.j2.total();
  BlockLayout layout = double_extension_layout(x);
  const int total = layout.dims().total();
  Representation coad = coadjoint(x.j2);

  SuperAlgebra s;
  s.name = "dext(" + j1.name + "," + x.j2.name + ")";
  s.dims = layout.dims();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      s.set_basis_product(layout.global_index(0, a), layout.global_index(0, b),
                          layout.embed(0, x.j2.basis_product(a, b)));
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < n1; ++i) {
      Vec v = layout.embed(1, x.phi[a].col(i));
      s.set_basis_product(layout.global_index(1, i), layout.global_index(0, a),
                          Rational(koszul_sign(j1.parity(i), x.j2.parity(a))) * v);
      s.set_basis_product(layout.global_index(0, a), layout.global_index(1, i), std::move(v));
    }
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      s.set_basis_product(layout.global_index(1, i), layout.global_index(1, j),
                          layout.embed(1, j1.basis_product(i, j)) +
                              layout.embed(2, phicheck_value(x, i, j)));
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      Vec v = layout.embed(2, coad.action[a].col(c));
      s.set_basis_product(layout.global_index(2, c), layout.global_index(0, a),
                          Rational(koszul_sign(x.j2.parity(c), x.j2.parity(a))) * v);
      s.set_basis_product(layout.global_index(0, a), layout.global_index(2, c), std::move(v));
    }

  Matrix gram(total, total);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      gram.at(layout.global_index(1, i), layout.global_index(1, j)) = x.j1.form.gram.at(i, j);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      gram.at(layout.global_index(0, a), layout.global_index(0, b)) = x.sigma.gram.at(a, b);
  for (int a = 0; a < m; ++a) {
    gram.at(layout.global_index(2, a), layout.global_index(0, a)) = Rational(1);
    gram.at(layout.global_index(0, a), layout.global_index(2, a)) =
        Rational(x.j2.parity(a) == Parity::odd ? -1 : 1);
  }

  PseudoEuclidean res{std::move(s), {layout.dims(), std::move(gram)}};
  CheckReport verify = check_pseudo_euclidean(res);
  for (const auto& e : verify.entries)
    if (!e.pass) throw std::logic_error("double extension result failed verification: " + e.check);
  return res;
}

DecompositionStep decompose(const PseudoEuclidean& p) {
  const SuperAlgebra& alg = p.algebra;
  const int n = alg.total();
  if (alg.dims.odd <= 1) throw std::invalid_argument("odd dimension <= 1");
  if (!check_pseudo_euclidean(p).all_pass())
    throw std::invalid_argument("decompose requires a valid pseudo-euclidean structure");

  Subspace oann = odd_annihilator(alg);
  if (oann.dim() == 0) throw std::invalid_argument("no odd annihilator element");
  Vec ustar = oann.basis[0];

  // u: the deterministic odd solution of B(u, u*) = 1.
  Matrix pairing(1, alg.dims.odd);
  for (int t = 0; t < alg.dims.odd; ++t)
    pairing.at(0, t) = p.form.eval(basis_vec(n, alg.dims.even + t), ustar);
  Vec coeffs = solve(pairing, Vec{Rational(1)});
  Vec u = zero_vec(n);
  for (int t = 0; t < alg.dims.odd; ++t) u[alg.dims.even + t] = coeffs[t];

  Subspace jprime = orthogonal_complement(p, Subspace{alg.dims, {u, ustar}});
  if (jprime.dim() != n - 2)
    throw std::logic_error("decompose: hyperbolic pair complement has wrong dimension");
  GradedDimension bdims = subspace_graded_dims(jprime);

  std::vector<Vec> nb;
  for (int k = 0; k < bdims.even; ++k) nb.push_back(jprime.basis[k]);
  nb.push_back(u);
  for (int k = bdims.even; k < jprime.dim(); ++k) nb.push_back(jprime.basis[k]);
  nb.push_back(ustar);
  const int pu = bdims.even;
  const int pus = n - 1;
  Matrix t_inv = inverse(Matrix::from_cols(nb, n));
  auto expand = [&](const Vec& v) { return mat_vec(t_inv, v); };
  auto newpos = [&](int i) { return i < bdims.even ? i : i + 1; };
  auto to_base = [&](const Vec& nc) {
    Vec b = zero_vec(n - 2);
    for (int i = 0; i < n - 2; ++i) b[i] = nc[newpos(i)];
    return b;
  };

  Vec uu = expand(alg.multiply(u, u));
  if (!uu[pu].is_zero()) throw std::logic_error("decompose: u component of u*u is nonzero");
  Vec x0 = to_base(uu);
  Rational lambda = uu[pus];

  BilinearForm bform = restrict_form(p.form, jprime);
  SuperAlgebra balg;
  balg.name = "core(" + alg.name + ")";
  balg.dims = bdims;
  GradedLinearMap d(bdims, bdims, Parity::odd);
  for (int i = 0; i < n - 2; ++i) {
    Vec ux = expand(alg.multiply(u, nb[newpos(i)]));
    if (!ux[pu].is_zero()) throw std::logic_error("decompose: u component of u*x is nonzero");
    Vec di = to_base(ux);
    for (int k = 0; k < n - 2; ++k) d.mat.at(k, i) = di[k];
    if (ux[pus] != -bform.eval(x0, basis_vec(n - 2, i)))
      throw std::logic_error("decompose: eta disagrees with -B(x0, x)");
    for (int j = 0; j < n - 2; ++j) {
      Vec xy = expand(alg.multiply(nb[newpos(i)], nb[newpos(j)]));
      if (!xy[pu].is_zero()) throw std::logic_error("decompose: u component of x*y is nonzero");
      if (xy[pus] != bform.eval(d.mat.col(i), basis_vec(n - 2, j)))
        throw std::logic_error("decompose: phi disagrees with B(D(x), y)");
      balg.set_basis_product(i, j, to_base(xy));
    }
  }
  if (!d.respects_degree()) throw std::logic_error("decompose: extracted map is not odd");

  GdextData data{{std::move(balg), std::move(bform)}, std::move(d), x0, lambda};

  CheckReport rep;
  if (is_zero(x0))
    rep.add_pass("x0_vanishes");
  else
    rep.add_fail("x0_vanishes", {}, x0, "extracted x0 is nonzero");
  if (lambda.is_zero())
    rep.add_pass("lambda_vanishes");
  else
    rep.add_fail("lambda_vanishes", {}, {lambda}, "extracted lambda is nonzero");
  rep.merge(check_gdext_data(data), "data_");

  PseudoEuclidean rebuilt = gdext_build(data);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (expand(alg.multiply(nb[i], nb[j])) != rebuilt.algebra.basis_product(i, j))
        throw std::logic_error("decompose round trip failed on products");
      if (p.form.eval(nb[i], nb[j]) != rebuilt.form.gram.at(i, j))
        throw std::logic_error("decompose round trip failed on the form");
    }
  rep.add_pass("round_trip_products");
  rep.add_pass("round_trip_form");

  return {std::move(data), std::move(nb), std::move(rep)};
}

DecompositionTower iterate_decompose(const PseudoEuclidean& p) {
  DecompositionTower tower{{}, p};
  while (tower.residual.algebra.dims.odd > 1) {
    DecompositionStep step = decompose(tower.residual);
    tower.residual = step.data.base;
    tower.steps.push_back(std::move(step));
  }
  return tower;
}

namespace {

void require_common_base(const GdextData& g1, const GdextData& g2) {
  if (g1.base.algebra.dims != g2.base.algebra.dims ||
      g1.base.algebra.products != g2.base.algebra.products ||
      g1.base.form.gram != g2.base.form.gram)
    throw std::invalid_argument("isometry witness requires a common base");
}

void require_witness_shape(const IsometryWitness& w, int n) {
  if (w.s.mat.rows != n || w.s.mat.cols != n || (int)w.z0.size() != n)
    throw std::invalid_argument("isometry witness dimension mismatch");
}

}  // namespace

CheckReport check_isometry_conditions(const IsometryWitness& w, const GdextData& g1,
                                      const GdextData& g2) {
  require_common_base(g1, g2);
  const SuperAlgebra& base = g1.base.algebra;
  const BilinearForm& b = g1.base.form;
  const int n = base.total();
  require_witness_shape(w, n);

  CheckReport rep;
  rep.merge(verify_isometry(w.s, g1.base, g2.base), "s_");

  {
    CheckEntry e{"z0_even_annihilator"};
    for (int k = base.dims.even; k < n && e.pass; ++k)
      if (!w.z0[k].is_zero()) {
        e.pass = false;
        e.witness = {k};
        e.defect = {w.z0[k]};
        e.note = "z0 has an odd component";
      }
    for (int j = 0; j < n && e.pass; ++j) {
      Vec left = base.multiply(w.z0, basis_vec(n, j));
      Vec right = base.multiply(basis_vec(n, j), w.z0);
      if (!is_zero(left) || !is_zero(right)) {
        e.pass = false;
        e.witness = {j};
        e.defect = is_zero(left) ? std::move(right) : std::move(left);
        e.note = "z0 * e_j or e_j * z0 is nonzero";
      }
    }
    rep.add(std::move(e));
  }

  if (w.alpha.is_zero()) {
    rep.add_fail("alpha_nonzero", {}, {});
    rep.add_fail("lambda_condition", {}, {}, "not evaluated, alpha is zero");
    rep.add_fail("x_condition", {}, {}, "not evaluated, alpha is zero");
    rep.add_fail("d_condition", {}, {}, "not evaluated, alpha is zero");
    return rep;
  }
  rep.add_pass("alpha_nonzero");

  const Rational a3 = w.alpha * w.alpha * w.alpha;
  Vec sx1 = mat_vec(w.s.mat, g1.x0);
  Rational lam = a3 * g1.lambda - g2.lambda - b.eval(w.z0, a3 * sx1);
  if (lam.is_zero())
    rep.add_pass("lambda_condition");
  else
    rep.add_fail("lambda_condition", {}, {lam});

  Vec xd = sx1 - (w.alpha * w.alpha).inverse() * g2.x0;
  if (is_zero(xd))
    rep.add_pass("x_condition");
  else
    rep.add_fail("x_condition", {}, std::move(xd));

  if (rank(w.s.mat) != n) {
    rep.add_fail("d_condition", {}, {}, "not evaluated, s is singular");
    return rep;
  }
  Matrix dd = mat_sub(mat_mul(mat_mul(w.s.mat, g1.d.mat), inverse(w.s.mat)),
                      mat_scale(w.alpha.inverse(), g2.d.mat));
  CheckEntry e{"d_condition"};
  for (int i = 0; i < n && e.pass; ++i)
    for (int j = 0; j < n; ++j)
      if (!dd.at(i, j).is_zero()) {
        e.pass = false;
        e.witness = {i, j};
        e.defect = {dd.at(i, j)};
        break;
      }
  rep.add(std::move(e));
  return rep;
}

GradedLinearMap build_isometry(const IsometryWitness& w, const GdextData& g1,
                               const GdextData& g2) {
  require_common_base(g1, g2);
  if (w.alpha.is_zero()) throw std::invalid_argument("alpha must be nonzero");
  const int n = g1.base.algebra.total();
  require_witness_shape(w, n);
  if (rank(w.s.mat) != n) throw std::invalid_argument("witness map s is singular");

  const BilinearForm& b = g1.base.form;
  BlockLayout layout = gdext_layout(g1.base.algebra.dims);
  const int iu = layout.global_index(0, 0);
  const int ius = layout.global_index(2, 0);

  GradedLinearMap psi(layout.dims(), layout.dims(), Parity::even);
  const Rational gamma = w.alpha.inverse();
  const Rational mu = -(w.alpha / Rational(2)) * b.eval(w.z0, w.z0);
  Vec cu = layout.embed(1, w.z0);
  cu[iu] += gamma;
  cu[ius] += mu;
  set_col(psi.mat, iu, cu);
  for (int i = 0; i < n; ++i) {
    Vec sx = w.s.mat.col(i);
    Vec cx = layout.embed(1, sx);
    cx[ius] -= w.alpha * b.eval(w.z0, sx);
    set_col(psi.mat, layout.global_index(1, i), cx);
  }
  psi.mat.at(ius, ius) = w.alpha;
  return psi;
}

CheckReport verify_isometry(const GradedLinearMap& psi, const PseudoEuclidean& p1,
                            const PseudoEuclidean& p2) {
  const int n = p1.algebra.total();
  if (psi.source != p1.algebra.dims || psi.target != p2.algebra.dims ||
      p2.algebra.total() != n)
    throw std::invalid_argument("isometry map dimension mismatch");

  CheckReport rep;
  if (psi.degree != Parity::even)
    rep.add_fail("even_invertible", {}, {}, "declared degree is odd");
  else if (!psi.respects_degree())
    rep.add_fail("even_invertible", psi.degree_violation(), {}, "parity-mixing entry");
  else if (rank(psi.mat) != n)
    rep.add_fail("even_invertible", {}, {}, "matrix is singular");
  else
    rep.add_pass("even_invertible");

  CheckEntry hom{"homomorphism"};
  for (int i = 0; i < n && hom.pass; ++i)
    for (int j = 0; j < n; ++j) {
      Vec defect = psi.apply(p1.algebra.multiply(basis_vec(n, i), basis_vec(n, j))) -
                   p2.algebra.multiply(psi.mat.col(i), psi.mat.col(j));
      if (!is_zero(defect)) {
        hom.pass = false;
        hom.witness = {i, j};
        hom.defect = std::move(defect);
        break;
      }
    }
  rep.add(std::move(hom));

  CheckEntry fp{"form_preserved"};
  for (int i = 0; i < n && fp.pass; ++i)
    for (int j = 0; j < n; ++j) {
      Rational defect = p2.form.eval(psi.mat.col(i), psi.mat.col(j)) - p1.form.gram.at(i, j);
      if (!defect.is_zero()) {
        fp.pass = false;
        fp.witness = {i, j};
        fp.defect = {defect};
        break;
      }
    }
  rep.add(std::move(fp));

  return rep;
}

}  // namespace mocklie
