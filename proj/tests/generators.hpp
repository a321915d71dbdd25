#pragma once

#include <array>
#include <map>

#include "mocklie/catalog.hpp"
#include "mocklie/representation.hpp"

// Seeded random inputs for the property suites and the acceptance run.
namespace gen {

using namespace mocklie;

// Arbitrary sparse structure constants; parity of the entries is not
// constrained, so most tables violate most axioms.
inline SuperAlgebra random_table(Lcg& rng, GradedDimension dims, int fill_permille = 250) {
  SuperAlgebra a;
  a.name = "random";
  a.dims = dims;
  int n = dims.total();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec v = zero_vec(n);
      bool any = false;
      for (int k = 0; k < n; ++k)
        if ((int)(rng.next_u64() % 1000) < fill_permille) {
          v[k] = rng.next_rational();
          any = any || !v[k].is_zero();
        }
      if (any) a.set_basis_product(i, j, v);
    }
  return a;
}

// Random even map with invertible blocks, for change-of-basis tricks.
inline GradedLinearMap random_invertible_even(Lcg& rng, GradedDimension dims) {
  for (;;) {
    GradedLinearMap m(dims, dims, Parity::even);
    for (int i = 0; i < dims.total(); ++i)
      for (int j = 0; j < dims.total(); ++j)
        if (dims.parity(i) == dims.parity(j))
          m.mat.at(i, j) = (i == j) ? Rational(1) + rng.next_rational() : rng.next_rational();
    if (rank(m.mat) == dims.total()) return m;
  }
}

// A pool of valid mock-Lie superalgebras assembled from the catalog and
// the constructions, indexed deterministically.
inline SuperAlgebra valid_algebra(int index) {
  switch (index % 8) {
    case 0: return make_e2();
    case 1: return make_h3();
    case 2: return make_abelian({1, 2});
    case 3: return make_d4().algebra;
    case 4: return direct_sum(make_e2(), make_h3());
    case 5: return tensor_assoc(make_h3(), make_grassmann1(), KoszulMode::on);
    case 6: return tstar_extension(make_e2(), Cocycle{{2, 0}, {2, 0}, {}}).algebra;
    case 7: return semidirect_product(make_h3(), adjoint(make_h3()));
  }
  return make_abelian({0, 0});
}

// Cocycle with random values in the parity-allowed slots only, usually
// violating supersymmetry or the cyclic condition.
inline Cocycle random_even_cocycle(Lcg& rng, GradedDimension algebra_dims,
                                   GradedDimension module) {
  Cocycle w;
  w.algebra_dims = algebra_dims;
  w.module = module;
  int n = algebra_dims.total(), m = module.total();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec v = zero_vec(m);
      bool any = false;
      for (int k = 0; k < m; ++k) {
        if (module.parity(k) != parity_sum(algebra_dims.parity(i), algebra_dims.parity(j)))
          continue;
        v[k] = rng.next_rational();
        any = any || !v[k].is_zero();
      }
      if (any) w.values[{i, j}] = v;
    }
  return w;
}

// Solves the supersymmetry and cyclic conditions as a linear system
// over the parity-allowed slots and returns a random member of the
// solution space.
inline Cocycle sample_valid_cocycle(Lcg& rng, const SuperAlgebra& a, const Representation& r) {
  int n = a.total(), m = r.module.total();
  std::vector<std::array<int, 3>> slots;
  std::map<std::array<int, 3>, int> slot_of;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        if (r.module.parity(k) == parity_sum(a.parity(i), a.parity(j))) {
          slot_of[{i, j, k}] = (int)slots.size();
          slots.push_back({i, j, k});
        }
  auto slot = [&](int i, int j, int k) -> int {
    auto it = slot_of.find({i, j, k});
    return it == slot_of.end() ? -1 : it->second;
  };
  auto bump = [&](Vec& row, int s, const Rational& c) {
    if (s >= 0) row[s] += c;
  };

  std::vector<Vec> rows;
  // W(i,j) = (-1)^{|i||j|} W(j,i)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k) {
        Vec row = zero_vec((int)slots.size());
        bump(row, slot(i, j, k), 1);
        bump(row, slot(j, i, k), -Rational(koszul_sign(a.parity(i), a.parity(j))));
        if (!is_zero(row)) rows.push_back(row);
      }
  // cyclic sum of (-1)^{|x||z|} [ W(x, y*z) + pi(x) W(y,z) ] over basis
  // triples, one row per value coordinate.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int k = 0; k < m; ++k) {
          Vec row = zero_vec((int)slots.size());
          std::array<std::array<int, 3>, 3> cyc = {{{i, j, l}, {j, l, i}, {l, i, j}}};
          for (const auto& [x, y, z] : cyc) {
            Rational s(koszul_sign(a.parity(x), a.parity(z)));
            Vec yz = a.basis_product(y, z);
            for (int t = 0; t < n; ++t)
              if (!yz[t].is_zero()) bump(row, slot(x, t, k), s * yz[t]);
            const Matrix& pix = r.action[x];
            for (int t = 0; t < m; ++t)
              if (!pix.at(k, t).is_zero()) bump(row, slot(y, z, t), s * pix.at(k, t));
          }
          if (!is_zero(row)) rows.push_back(row);
        }

  std::vector<Vec> basis = nullspace(Matrix::from_rows(rows, (int)slots.size()));
  Vec coords = zero_vec((int)slots.size());
  for (const Vec& b : basis) coords = coords + rng.next_rational() * b;

  Cocycle w;
  w.algebra_dims = a.dims;
  w.module = r.module;
  std::map<std::pair<int, int>, Vec> vals;
  for (size_t s = 0; s < slots.size(); ++s) {
    if (coords[s].is_zero()) continue;
    auto [i, j, k] = slots[s];
    auto& v = vals[{i, j}];
    if (v.empty()) v = zero_vec(m);
    v[k] = coords[s];
  }
  for (auto& [key, v] : vals) w.values[key] = v;
  return w;
}

}  // namespace gen
