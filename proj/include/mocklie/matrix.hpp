#pragma once

#include <optional>
#include <vector>

#include "mocklie/rational.hpp"

namespace mocklie {

// Dense row-major matrix over Q.
struct Matrix {
  int rows = 0;
  int cols = 0;
  Vec entries;  // size rows * cols

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), entries(zero_vec(r * c)) {}

  Rational& at(int i, int j) { return entries[(size_t)i * cols + j]; }
  const Rational& at(int i, int j) const { return entries[(size_t)i * cols + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  Matrix transpose() const;
  bool is_zero() const;

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix from_cols(const std::vector<Vec>& cols, int rows);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Vec mat_vec(const Matrix& m, const Vec& v);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Rational& c, const Matrix& m);

// Reduces m in place to reduced row echelon form. Pivot choice is
// deterministic: scanning columns left to right, the first row (top to
// bottom among unused rows) with a nonzero entry in the column becomes
// the pivot row. Returns the pivot columns in order.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

// Basis of {x : m x = 0}. Each basis vector corresponds to one free
// column of the RREF and carries entry 1 there; vectors are emitted in
// free-column order.
std::vector<Vec> nullspace(const Matrix& m);

// Particular solution of m x = b with all free variables set to zero.
// Throws std::invalid_argument("inconsistent") when rank([m|b]) > rank(m).
Vec solve(const Matrix& m, const Vec& b);
std::optional<Vec> try_solve(const Matrix& m, const Vec& b);

bool in_span(const std::vector<Vec>& basis, const Vec& v);

// Deterministic basis of the row space: nonzero rows of the RREF.
std::vector<Vec> row_space_basis(const std::vector<Vec>& rows, int cols);

Matrix inverse(const Matrix& m);  // throws when m is singular

}  // namespace mocklie
