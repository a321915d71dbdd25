#include "mocklie/representation.hpp"

#include <stdexcept>

namespace mocklie {

Vec Representation::act(const Vec& x, const Vec& v) const {
  if ((int)x.size() != algebra.total()) throw std::invalid_argument("vector size mismatch");
  Vec r = zero_vec(module.total());
  for (int i = 0; i < algebra.total(); ++i)
    if (!x[i].is_zero()) r = r + x[i] * act(i, v);
  return r;
}

CheckReport check_representation(const Representation& r) {
  CheckReport rep;
  int t = r.algebra.total(), d = r.module.total();
  if ((int)r.action.size() != t) throw std::invalid_argument("action size mismatch");

  CheckEntry evenness{"action_evenness", true, {}, {}, ""};
  for (int i = 0; i < t && evenness.pass; ++i) {
    GradedLinearMap m{r.module, r.module, r.op_parity(i)};
    m.mat = r.action[i];
    std::vector<int> bad = m.degree_violation();
    if (!bad.empty())
      evenness = {"action_evenness", false, {i, bad[0], bad[1]},
                  {m.mat.at(bad[0], bad[1])},
                  "operator parity must match the parity of the acting basis vector"};
  }
  rep.add(evenness);

  CheckEntry identity{"representation_identity", true, {}, {}, ""};
  for (int i = 0; i < t && identity.pass; ++i)
    for (int j = 0; j < t && identity.pass; ++j) {
      Matrix lhs(d, d);
      Vec pij = r.algebra.basis_product(i, j);
      for (int l = 0; l < t; ++l)
        if (!pij[l].is_zero()) lhs = mat_add(lhs, mat_scale(pij[l], r.action[l]));
      Matrix anti = mat_add(mat_mul(r.action[i], r.action[j]),
                            mat_scale(Rational(koszul_sign(r.op_parity(i), r.op_parity(j))),
                                      mat_mul(r.action[j], r.action[i])));
      Matrix defect = mat_add(lhs, anti);  // pi(x*y) + pi(x)pi(y) + (-1)^{..} pi(y)pi(x)
      if (!defect.is_zero())
        for (int c = 0; c < d && identity.pass; ++c) {
          Vec col = defect.col(c);
          if (!is_zero(col)) identity = {"representation_identity", false, {i, j, c}, col, ""};
        }
    }
  rep.add(identity);
  return rep;
}

Representation adjoint(const SuperAlgebra& a) {
  if (!check_mock_lie(a).all_pass())
    throw std::invalid_argument("adjoint requires a mock-Lie algebra");
  Representation r{a, a.dims, {}};
  int t = a.total();
  for (int i = 0; i < t; ++i) {
    Matrix m(t, t);
    for (int c = 0; c < t; ++c) {
      Vec col = a.basis_product(i, c);
      for (int row = 0; row < t; ++row) m.at(row, c) = col[row];
    }
    r.action.push_back(std::move(m));
  }
  return r;
}

Representation dual(const Representation& r) {
  if (!check_representation(r).all_pass())
    throw std::invalid_argument("dual requires a valid representation");
  int t = r.algebra.total(), d = r.module.total();
  Representation s{r.algebra, r.module, {}};
  // pi*(e_i) e_c* = (-1)^{|e_c||e_i|} e_c* o pi(e_i), read off on basis
  // vectors: (pi*(e_i))_{rc} = (-1)^{|e_c||e_i|} (pi(e_i))_{cr}.
  for (int i = 0; i < t; ++i) {
    Matrix m(d, d);
    for (int row = 0; row < d; ++row)
      for (int c = 0; c < d; ++c)
        m.at(row, c) = Rational(koszul_sign(r.module.parity(c), r.op_parity(i))) *
                       r.action[i].at(c, row);
    s.action.push_back(std::move(m));
  }
  // evaluation self-check: (pi*(e_i) f)(v) = (-1)^{|f||e_i|} f(pi(e_i) v)
  for (int i = 0; i < t; ++i)
    for (int c = 0; c < d; ++c) {
      Vec f = s.act(i, basis_vec(d, c));
      for (int b = 0; b < d; ++b) {
        Rational lhs = f[b];
        Rational rhs = Rational(koszul_sign(r.module.parity(c), r.op_parity(i))) *
                       r.act(i, basis_vec(d, b))[c];
        if (lhs != rhs) throw std::logic_error("dual action self-check failed");
      }
    }
  if (!check_representation(s).all_pass())
    throw std::logic_error("dual action self-check failed");
  return s;
}

Representation coadjoint(const SuperAlgebra& a) { return dual(adjoint(a)); }

BlockLayout semidirect_layout(const SuperAlgebra& a, const Representation& r) {
  return BlockLayout({a.dims, r.module});
}

SuperAlgebra semidirect_product(const SuperAlgebra& a, const Representation& r) {
  Cocycle zero{a.dims, r.module, {}};
  SuperAlgebra s = central_extension(a, r, zero);
  s.name = a.name + "|x" + r.algebra.name;
  return s;
}

IntertwinerSpace intertwiner_space(const Representation& r1, const Representation& r2) {
  if (r1.algebra.dims != r2.algebra.dims || r1.algebra.products != r2.algebra.products)
    throw std::invalid_argument("intertwiner requires representations of the same algebra");
  int t = r1.algebra.total();
  int d1 = r1.module.total(), d2 = r2.module.total();

  std::vector<std::pair<int, int>> slots;  // (row in V2, col in V1), even maps only
  std::map<std::pair<int, int>, int> slot_of;
  for (int row = 0; row < d2; ++row)
    for (int col = 0; col < d1; ++col)
      if (r2.module.parity(row) == r1.module.parity(col)) {
        slot_of[{row, col}] = (int)slots.size();
        slots.push_back({row, col});
      }

  std::vector<Vec> rows;
  for (int i = 0; i < t; ++i)
    for (int row = 0; row < d2; ++row)
      for (int col = 0; col < d1; ++col) {
        Vec eq = zero_vec((int)slots.size());
        bool nonzero = false;
        auto accumulate = [&](int rr, int cc, const Rational& coeff) {
          auto it = slot_of.find({rr, cc});
          if (it == slot_of.end() || coeff.is_zero()) return;
          eq[it->second] += coeff;
          nonzero = true;
        };
        // (pi2(e_i) Phi - Phi pi1(e_i))_{row, col} = 0
        for (int s = 0; s < d2; ++s) accumulate(s, col, r2.action[i].at(row, s));
        for (int s = 0; s < d1; ++s) accumulate(row, s, -r1.action[i].at(s, col));
        if (nonzero) rows.push_back(std::move(eq));
      }

  Matrix system = rows.empty() ? Matrix(0, (int)slots.size())
                               : Matrix::from_rows(rows, (int)slots.size());
  IntertwinerSpace space;
  for (const Vec& sol : nullspace(system)) {
    GradedLinearMap f(r1.module, r2.module, Parity::even);
    for (size_t s = 0; s < slots.size(); ++s) f.mat.at(slots[s].first, slots[s].second) = sol[s];
    space.basis.push_back(std::move(f));
  }

  if (d1 != d2) return space;
  auto invertible = [&](const GradedLinearMap& f) { return rank(f.mat) == d1; };
  for (const auto& f : space.basis)
    if (invertible(f)) {
      space.witness = f;
      return space;
    }
  for (int tpow = 1; tpow <= 32 && !space.basis.empty(); ++tpow) {
    GradedLinearMap f(r1.module, r2.module, Parity::even);
    Rational tk(1);
    for (const auto& b : space.basis) {
      tk *= Rational(tpow);
      f = map_add(f, map_scale(tk, b));
    }
    if (invertible(f)) {
      space.witness = f;
      return space;
    }
  }
  return space;
}

GradedLinearMap double_dual_map(const Representation& r) {
  Representation dd = dual(dual(r));
  int d = r.module.total();
  GradedLinearMap iota(r.module, r.module, Parity::even);
  // iota(e_b)(e_c*) = (-1)^{|e_b||e_c*|} e_c*(e_b), so iota(e_b) = (-1)^{|e_b|} e_b**.
  for (int b = 0; b < d; ++b)
    iota.mat.at(b, b) = Rational(r.module.parity(b) == Parity::odd ? -1 : 1);
  for (int i = 0; i < r.algebra.total(); ++i) {
    Matrix lhs = mat_mul(dd.action[i], iota.mat);
    Matrix rhs = mat_mul(iota.mat, r.action[i]);
    if (!(lhs == rhs)) throw std::logic_error("double dual map fails to intertwine");
  }
  return iota;
}

Vec Cocycle::value(int i, int j) const {
  auto it = values.find({i, j});
  if (it != values.end()) return it->second;
  return zero_vec(module.total());
}

Vec Cocycle::value(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(module.total());
  for (const auto& [ij, val] : values) {
    Rational c = x[ij.first] * y[ij.second];
    if (!c.is_zero()) r = r + c * val;
  }
  return r;
}

CheckReport check_cocycle(const SuperAlgebra& a, const Representation& r, const Cocycle& w) {
  if (w.algebra_dims != a.dims || w.module != r.module)
    throw std::invalid_argument("cocycle dimension mismatch");
  CheckReport rep;
  int t = a.total();

  CheckEntry sym{"cocycle_supersymmetry", true, {}, {}, ""};
  for (int i = 0; i < t && sym.pass; ++i)
    for (int j = 0; j < t && sym.pass; ++j) {
      Vec d = w.value(i, j) - Rational(koszul_sign(a.parity(i), a.parity(j))) * w.value(j, i);
      if (!is_zero(d)) sym = {"cocycle_supersymmetry", false, {i, j}, d, ""};
    }
  rep.add(sym);

  CheckEntry cyc{"cocycle_cyclic", true, {}, {}, ""};
  auto term = [&](int x, int y, int z) {
    Vec yz = a.basis_product(y, z);
    return w.value(basis_vec(t, x), yz) + r.act(x, w.value(y, z));
  };
  for (int i = 0; i < t && cyc.pass; ++i)
    for (int j = 0; j < t && cyc.pass; ++j)
      for (int k = 0; k < t && cyc.pass; ++k) {
        Vec d = Rational(koszul_sign(a.parity(i), a.parity(k))) * term(i, j, k) +
                Rational(koszul_sign(a.parity(j), a.parity(i))) * term(j, k, i) +
                Rational(koszul_sign(a.parity(k), a.parity(j))) * term(k, i, j);
        if (!is_zero(d)) cyc = {"cocycle_cyclic", false, {i, j, k}, d, ""};
      }
  rep.add(cyc);
  return rep;
}

SuperAlgebra central_extension(const SuperAlgebra& a, const Representation& r, const Cocycle& w) {
  if (w.algebra_dims != a.dims || w.module != r.module)
    throw std::invalid_argument("cocycle dimension mismatch");
  if ((int)r.action.size() != a.total()) throw std::invalid_argument("action size mismatch");
  BlockLayout layout = semidirect_layout(a, r);
  SuperAlgebra s;
  s.name = a.name + "#" + r.algebra.name;
  s.dims = layout.dims();
  int t = a.total(), d = r.module.total();
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      Vec value = layout.embed(0, a.basis_product(i, j)) + layout.embed(1, w.value(i, j));
      if (!is_zero(value)) s.set_basis_product(layout.global_index(0, i),
                                               layout.global_index(0, j), value);
    }
  for (int i = 0; i < t; ++i)
    for (int c = 0; c < d; ++c) {
      Vec av = r.act(i, basis_vec(d, c));
      if (is_zero(av)) continue;
      s.set_basis_product(layout.global_index(0, i), layout.global_index(1, c),
                          layout.embed(1, av));
      s.set_basis_product(layout.global_index(1, c), layout.global_index(0, i),
                          Rational(koszul_sign(r.module.parity(c), a.parity(i))) *
                              layout.embed(1, av));
    }
  return s;
}

}  // namespace mocklie
