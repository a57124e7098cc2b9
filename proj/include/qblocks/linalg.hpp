#pragma once

#include <vector>

#include "qblocks/coord.hpp"

namespace qblocks {

using RationalVector = std::vector<Rational>;

/// Subspace of Q^dim kept as a reduced row echelon basis.
class Subspace {
 public:
  explicit Subspace(int dim = 0) : dim_(dim) {}

  int ambient_dim() const { return dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<RationalVector>& basis() const { return rows_; }

  /// Adds v; returns true when the dimension grew.
  bool add(const RationalVector& v);
  bool contains(const RationalVector& v) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && a.contains(b);
  }

 private:
  RationalVector reduce(RationalVector v) const;

  int dim_;
  std::vector<RationalVector> rows_;
  std::vector<int> pivots_;
};

/// Basis of {x : sum_k x_k * columns[k] = 0}.
std::vector<RationalVector> kernel(const std::vector<RationalVector>& columns);

}  // namespace qblocks
