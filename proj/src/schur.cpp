#include "qblocks/schur.hpp"

#include <algorithm>
#include <numeric>

#include "qblocks/errors.hpp"

namespace qblocks {

namespace {

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

void compositions(int k, int m, Exponent& current, int pos, LaurentPoly& out) {
  if (pos == m - 1) {
    current[static_cast<std::size_t>(pos)] = k;
    out.add_term(current, 1);
    return;
  }
  for (int v = k; v >= 0; --v) {
    current[static_cast<std::size_t>(pos)] = v;
    compositions(k - v, m, current, pos + 1, out);
  }
}

}  // namespace

std::optional<PartitionIndex> PartitionIndex::make(const std::vector<long>& entries, int m) {
  if (m < 1) throw DomainError("partition index needs m >= 1 variables");
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k] > entries[k - 1]) throw DomainError("partition index must be weakly decreasing");
  }
  std::vector<long> parts = entries;
  const auto um = static_cast<std::size_t>(m);
  if (parts.size() > um) {
    for (std::size_t k = um; k < parts.size(); ++k) {
      if (parts[k] != 0) return std::nullopt;
    }
    parts.resize(um);
  }
  const long pad = parts.empty() ? 0 : std::min(0L, parts.back());
  parts.resize(um, pad);
  return PartitionIndex{parts, m};
}

std::vector<long> PartitionIndex::normalized() const {
  std::vector<long> out = parts;
  for (auto& p : out) p -= twist();
  return out;
}

long PartitionIndex::size() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

LaurentPoly complete_homogeneous(int k, int m) {
  LaurentPoly out(m);
  if (k < 0) return out;
  Exponent current(static_cast<std::size_t>(m), 0);
  compositions(k, m, current, 0, out);
  return out;
}

LaurentPoly schur_jt(const PartitionIndex& mu) {
  const int m = mu.m;
  const auto lam = mu.normalized();
  std::vector<std::vector<LaurentPoly>> h(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      h[static_cast<std::size_t>(i)].push_back(
          complete_homogeneous(static_cast<int>(lam[static_cast<std::size_t>(i)]) - i + j, m));
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det(m);
  do {
    LaurentPoly term = LaurentPoly::constant(m, permutation_sign(perm));
    for (int i = 0; i < m && !term.is_zero(); ++i) {
      term = term * h[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det.shifted(Exponent(static_cast<std::size_t>(m), mu.twist()));
}

LaurentPoly schur_jt(const std::vector<long>& entries, int m) {
  const auto mu = PartitionIndex::make(entries, m);
  return mu ? schur_jt(*mu) : LaurentPoly(m);
}

std::vector<PartitionIndex> pieri_expand(const PartitionIndex& mu) {
  std::vector<PartitionIndex> out;
  for (std::size_t i = 0; i < mu.parts.size(); ++i) {
    if (i > 0 && mu.parts[i - 1] < mu.parts[i] + 1) continue;
    PartitionIndex nu = mu;
    ++nu.parts[i];
    out.push_back(nu);
  }
  return out;
}

std::vector<long> rho_vector(int m) {
  std::vector<long> rho(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) rho[static_cast<std::size_t>(i)] = m - 1 - i;
  return rho;
}

std::optional<Straightened> straighten(const std::vector<long>& raw) {
  if (raw.empty()) throw DomainError("straighten needs at least one entry");
  std::vector<int> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return raw[static_cast<std::size_t>(a)] > raw[static_cast<std::size_t>(b)];
  });
  Straightened out;
  for (int k : order) out.alternant.push_back(raw[static_cast<std::size_t>(k)]);
  for (std::size_t k = 1; k < out.alternant.size(); ++k) {
    if (out.alternant[k] == out.alternant[k - 1]) return std::nullopt;
  }
  out.sign = permutation_sign(order);
  const int m = static_cast<int>(raw.size());
  const auto rho = rho_vector(m);
  std::vector<long> parts(raw.size());
  for (std::size_t k = 0; k < parts.size(); ++k) parts[k] = out.alternant[k] - rho[k];
  out.index = *PartitionIndex::make(parts, m);
  return out;
}

LaurentPoly alternant(const std::vector<long>& e) {
  const int m = static_cast<int>(e.size());
  std::vector<int> perm(e.size());
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly out(m);
  do {
    Exponent x(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) x[static_cast<std::size_t>(perm[i])] = e[i];
    out.add_term(x, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace qblocks
