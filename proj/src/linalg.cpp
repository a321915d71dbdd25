#include <algorithm>
#include <stdexcept>

#include "mocklie/matrix.hpp"

namespace mocklie {

Vec Matrix::row(int i) const {
  Vec r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

Vec Matrix::col(int j) const {
  Vec c(rows);
  for (int i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const { return mocklie::is_zero(entries); }

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m((int)rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if ((int)rows[i].size() != cols) throw std::invalid_argument("row size mismatch");
    for (int j = 0; j < cols; ++j) m.at((int)i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, (int)cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if ((int)cols[j].size() != rows) throw std::invalid_argument("column size mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, (int)j) = cols[j][i];
  }
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
  if (m.cols != (int)v.size()) throw std::invalid_argument("matrix shape mismatch");
  Vec r = zero_vec(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch");
  Matrix c = a;
  for (size_t i = 0; i < c.entries.size(); ++i) c.entries[i] += b.entries[i];
  return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch");
  Matrix c = a;
  for (size_t i = 0; i < c.entries.size(); ++i) c.entries[i] -= b.entries[i];
  return c;
}

Matrix mat_scale(const Rational& c, const Matrix& m) {
  Matrix r = m;
  for (auto& e : r.entries) e *= c;
  return r;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int pivot_row = 0;
  for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < m.rows; ++r)
      if (!m.at(r, col).is_zero()) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
    Rational inv = m.at(pivot_row, col).inverse();
    for (int j = col; j < m.cols; ++j) m.at(pivot_row, j) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == pivot_row) continue;
      Rational f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(pivot_row, j);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

int rank(Matrix m) { return (int)rref(m).size(); }

std::vector<Vec> nullspace(const Matrix& m) {
  Matrix r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.cols);
    v[free] = Rational(1);
    for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r.at((int)pr, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> try_solve(const Matrix& m, const Vec& b) {
  if ((int)b.size() != m.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  Vec x = zero_vec(m.cols);
  for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at((int)pr, m.cols);
  return x;
}

Vec solve(const Matrix& m, const Vec& b) {
  std::optional<Vec> x = try_solve(m, b);
  if (!x) throw std::invalid_argument("inconsistent");
  return *x;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  return try_solve(Matrix::from_cols(basis, (int)v.size()), v).has_value();
}

std::vector<Vec> row_space_basis(const std::vector<Vec>& rows, int cols) {
  Matrix m = Matrix::from_rows(rows, cols);
  rref(m);
  std::vector<Vec> basis;
  for (int i = 0; i < m.rows; ++i) {
    Vec r = m.row(i);
    if (!is_zero(r)) basis.push_back(std::move(r));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("matrix not square");
  int n = m.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  std::vector<int> pivots = rref(aug);
  if ((int)pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("matrix is singular");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace mocklie
