#include "qblocks/linalg.hpp"

#include "qblocks/errors.hpp"

namespace qblocks {

RationalVector Subspace::reduce(RationalVector v) const {
  if (static_cast<int>(v.size()) != dim_) throw DomainError("vector length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto p = static_cast<std::size_t>(pivots_[r]);
    if (sgn(v[p]) == 0) continue;
    const Rational f = v[p];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * rows_[r][k];
  }
  return v;
}

bool Subspace::add(const RationalVector& v) {
  RationalVector w = reduce(v);
  std::size_t p = 0;
  while (p < w.size() && sgn(w[p]) == 0) ++p;
  if (p == w.size()) return false;
  const Rational lead = w[p];
  for (auto& x : w) x /= lead;
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    const Rational f = row[p];
    for (std::size_t k = 0; k < row.size(); ++k) row[k] -= f * w[k];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(static_cast<int>(p));
  return true;
}

bool Subspace::contains(const RationalVector& v) const {
  for (const auto& x : reduce(v)) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.rows_) {
    if (!contains(row)) return false;
  }
  return true;
}

std::vector<RationalVector> kernel(const std::vector<RationalVector>& columns) {
  const std::size_t k = columns.size();
  if (k == 0) return {};
  const std::size_t rows = columns[0].size();
  // Row-reduce the augmented system [M | I]: rows of I whose M-part
  // vanishes span the kernel.
  std::vector<RationalVector> aug(k, RationalVector(rows + k));
  for (std::size_t c = 0; c < k; ++c) {
    if (columns[c].size() != rows) throw DomainError("kernel: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) aug[c][r] = columns[c][r];
    aug[c][rows + c] = 1;
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < rows && rank < k; ++col) {
    std::size_t pivot = rank;
    while (pivot < k && sgn(aug[pivot][col]) == 0) ++pivot;
    if (pivot == k) continue;
    std::swap(aug[rank], aug[pivot]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == rank || sgn(aug[r][col]) == 0) continue;
      const Rational f = aug[r][col] / aug[rank][col];
      for (std::size_t t = 0; t < aug[r].size(); ++t) aug[r][t] -= f * aug[rank][t];
    }
    ++rank;
  }
  std::vector<RationalVector> out;
  for (std::size_t r = rank; r < k; ++r) out.emplace_back(aug[r].begin() + static_cast<std::ptrdiff_t>(rows), aug[r].end());
  return out;
}

}  // namespace qblocks
