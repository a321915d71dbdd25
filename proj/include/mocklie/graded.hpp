#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mocklie/matrix.hpp"

namespace mocklie {

// Z/2 grading. Global index convention everywhere: on a space of graded
// dimension (m|n), indices 0..m-1 are even and m..m+n-1 are odd.
enum class Parity : int { even = 0, odd = 1 };

inline int parity_bit(Parity p) { return (int)p; }
inline Parity parity_sum(Parity a, Parity b) {
  return (Parity)((parity_bit(a) + parity_bit(b)) % 2);
}
// Koszul sign (-1)^{|a||b|}.
inline int koszul_sign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

struct GradedDimension {
  int even = 0;
  int odd = 0;

  int total() const { return even + odd; }
  Parity parity(int index) const {
    if (index < 0 || index >= total()) throw std::out_of_range("basis index out of range");
    return index < even ? Parity::even : Parity::odd;
  }
  friend bool operator==(const GradedDimension&, const GradedDimension&) = default;
};

// Index bookkeeping for a space assembled from graded blocks, with the
// combined layout even-first: all blocks' even vectors in block order,
// then all blocks' odd vectors in block order.
class BlockLayout {
 public:
  explicit BlockLayout(std::vector<GradedDimension> blocks);

  const GradedDimension& dims() const { return dims_; }
  int blocks() const { return (int)blocks_.size(); }
  const GradedDimension& block(int b) const { return blocks_[b]; }

  // local is an index in block b's own even-first layout.
  int global_index(int b, int local) const;

  Vec embed(int b, const Vec& local) const;
  Vec project(int b, const Vec& global) const;

 private:
  std::vector<GradedDimension> blocks_;
  std::vector<int> even_offset_;
  std::vector<int> odd_offset_;
  GradedDimension dims_;
};

// Linear map between graded spaces with a declared degree: degree even
// maps preserve parity blocks, degree odd maps swap them. mat acts on
// coordinate columns, so entry (i, j) is the coefficient of target
// basis vector i in the image of source basis vector j. Block sparsity
// for the declared degree is a checked property, not enforced on
// construction.
struct GradedLinearMap {
  GradedDimension source;
  GradedDimension target;
  Parity degree = Parity::even;
  Matrix mat;

  GradedLinearMap() = default;
  GradedLinearMap(GradedDimension src, GradedDimension tgt, Parity deg)
      : source(src), target(tgt), degree(deg), mat(tgt.total(), src.total()) {}

  Vec apply(const Vec& v) const { return mat_vec(mat, v); }

  // True when every entry lies in a block allowed by the degree.
  bool respects_degree() const;

  // First entry (i, j) outside the allowed blocks, if any.
  std::vector<int> degree_violation() const;

  friend bool operator==(const GradedLinearMap&, const GradedLinearMap&) = default;
};

GradedLinearMap compose(const GradedLinearMap& f, const GradedLinearMap& g);
GradedLinearMap map_scale(const Rational& c, const GradedLinearMap& f);
GradedLinearMap map_add(const GradedLinearMap& f, const GradedLinearMap& g);
GradedLinearMap zero_map(GradedDimension src, GradedDimension tgt, Parity deg);
GradedLinearMap identity_map(GradedDimension dims);

}  // namespace mocklie
