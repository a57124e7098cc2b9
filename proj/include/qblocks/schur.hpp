#pragma once

#include <optional>
#include <vector>

#include "qblocks/poly.hpp"

namespace qblocks {

/// Weakly decreasing integer index in m variables. `parts` always has length
/// m; `twist` is the last part, so parts - twist is an ordinary partition and
/// s_parts = (x_1...x_m)^twist * s_{parts - twist}.
struct PartitionIndex {
  std::vector<long> parts;
  int m = 0;

  /// Pads short input with min(0, last entry) and strips trailing zeros
  /// beyond m. Returns nullopt when more than m parts are nonzero (the
  /// Schur polynomial vanishes). Throws DomainError if not weakly decreasing.
  static std::optional<PartitionIndex> make(const std::vector<long>& entries, int m);

  long twist() const { return parts.empty() ? 0 : parts.back(); }
  std::vector<long> normalized() const;
  long size() const;  // sum of parts
  friend bool operator==(const PartitionIndex&, const PartitionIndex&) = default;
  friend auto operator<=>(const PartitionIndex&, const PartitionIndex&) = default;
};

/// Complete homogeneous symmetric polynomial h_k in m variables.
LaurentPoly complete_homogeneous(int k, int m);

/// Jacobi-Trudi determinant det(h_{mu_i - i + j}) times the monomial twist.
LaurentPoly schur_jt(const PartitionIndex& mu);
/// Convenience: vanishing indices give 0.
LaurentPoly schur_jt(const std::vector<long>& entries, int m);

/// All mu + e_i that stay weakly decreasing: s_mu * (x_1 + ... + x_m) is
/// their sum.
std::vector<PartitionIndex> pieri_expand(const PartitionIndex& mu);

/// Vandermonde-shift vector (m-1, ..., 1, 0).
std::vector<long> rho_vector(int m);

struct Straightened {
  int sign = 1;
  std::vector<long> alternant;  // strictly decreasing rearrangement of the input
  PartitionIndex index;         // alternant - rho
};

/// Reads raw as the exponent of an alternant a_raw = sum_w sign(w) x^{w raw}.
/// Repeated entries give zero; otherwise a_raw = sign * a_{sorted} and
/// a_{sorted} / a_rho = s_{sorted - rho}.
std::optional<Straightened> straighten(const std::vector<long>& raw);

/// Alternant sum_{w in S_m} sign(w) x^{w e}.
LaurentPoly alternant(const std::vector<long>& e);

}  // namespace qblocks
