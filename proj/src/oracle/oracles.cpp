#include "qblocks/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qblocks/errors.hpp"

namespace qblocks::oracle {

LaurentPoly schur_tableaux(const std::vector<long>& shape, int m) {
  LaurentPoly out(m);
  std::vector<std::vector<int>> tab;
  for (long len : shape) {
    if (len > 0) tab.emplace_back(static_cast<std::size_t>(len), 0);
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < tab.size(); ++r) {
    for (std::size_t c = 0; c < tab[r].size(); ++c) cells.emplace_back(r, c);
  }
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      Exponent e(static_cast<std::size_t>(m), 0);
      for (const auto& row : tab) {
        for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
      }
      out.add_term(e, 1);
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      tab[r][c] = v;
      fill(k + 1);
    }
  };
  fill(0);
  return out;
}

int atypicality_brute(const Weight& lambda) {
  const int n = lambda.n();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<int(int)> best = [&](int from) {
    while (from < n && used[static_cast<std::size_t>(from)]) ++from;
    if (from >= n) return 0;
    int result = best(from + 1);  // leave `from` unmatched
    used[static_cast<std::size_t>(from)] = true;
    for (int j = from + 1; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      if (!(lambda[static_cast<std::size_t>(from)] + lambda[static_cast<std::size_t>(j)]).is_zero()) continue;
      used[static_cast<std::size_t>(j)] = true;
      result = std::max(result, 1 + best(from + 1));
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(from)] = false;
    return result;
  };
  return best(0);
}

std::optional<LinkageWitness> central_witness_search(const Weight& lambda, const Weight& mu) {
  const int n = lambda.n();
  if (mu.n() != n) return std::nullopt;
  // All sets of disjoint zero-sum pairs.
  std::vector<std::vector<Root>> matchings;
  std::vector<Root> current;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(int)> grow = [&](int from) {
    matchings.push_back(current);
    for (int i = from; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      for (int j = i + 1; j < n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        if (!(lambda[static_cast<std::size_t>(i)] + lambda[static_cast<std::size_t>(j)]).is_zero()) continue;
        used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
        current.push_back({i + 1, j + 1});
        grow(i + 1);
        current.pop_back();
        used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = false;
      }
    }
  };
  grow(0);

  Permutation w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    for (const auto& matching : matchings) {
      Weight shifted = lambda;
      LinkageWitness witness{w, {}};
      for (const auto& alpha : matching) {
        const auto i = static_cast<std::size_t>(alpha.i - 1);
        const auto j = static_cast<std::size_t>(alpha.j - 1);
        const Scalar k = lambda[i] - mu[static_cast<std::size_t>(w[i] - 1)];
        shifted[i] -= k;
        shifted[j] += k;
        witness.pairs.push_back({alpha, k});
      }
      Weight image = shifted;
      for (std::size_t i = 0; i < w.size(); ++i) image[static_cast<std::size_t>(w[i] - 1)] = shifted[i];
      if (image == mu) return witness;
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return std::nullopt;
}

std::optional<std::pair<Weight, long>> lambda_minus_brute(const Weight& lambda, const Scalar& s, int ell,
                                                          long max_k) {
  const int n = lambda.n();
  int p = -1, q = -1;
  for (int i = 0; i < ell; ++i) {
    for (int j = ell; j < n; ++j) {
      if ((lambda[static_cast<std::size_t>(i)] + lambda[static_cast<std::size_t>(j)]).is_zero()) {
        p = i;
        q = j;
      }
    }
  }
  if (p < 0) return std::nullopt;
  for (long k = 1; k <= max_k; ++k) {
    Weight shifted = lambda;
    shifted[static_cast<std::size_t>(p)] -= Scalar(k);
    shifted[static_cast<std::size_t>(q)] += Scalar(k);
    Permutation w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
      const Weight candidate = weyl_apply(w, shifted);
      if (is_dominant(candidate, s, ell)) return std::make_pair(candidate, k);
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return std::nullopt;
}

FormalCharacter verma_kostant(const Weight& lambda, long depth) {
  const int n = lambda.n();
  std::vector<Root> roots;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) roots.push_back({i, j});
  }
  FormalCharacter out(lambda, depth);
  const std::int64_t top = clifford_dimension(ell_delta(lambda).ell);
  Offset off(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, long, int)> go = [&](std::size_t r, long height, int support) {
    if (r == roots.size()) {
      out.add_offset(off, top << support);
      return;
    }
    const Root& a = roots[r];
    const long step = a.j - a.i;
    for (long m = 0; height + m * step <= depth; ++m) {
      off[static_cast<std::size_t>(a.i - 1)] -= m;
      off[static_cast<std::size_t>(a.j - 1)] += m;
      go(r + 1, height + m * step, support + (m > 0 ? 1 : 0));
      off[static_cast<std::size_t>(a.i - 1)] += m;
      off[static_cast<std::size_t>(a.j - 1)] -= m;
    }
  };
  go(0, 0, 0);
  return out;
}

Scalar generic_symbol() { return Scalar::symbol("s"); }

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Weight random_weight(Rng& rng, int n, const std::vector<Scalar>& pool) {
  std::vector<Scalar> coords;
  for (int i = 0; i < n; ++i) {
    coords.push_back(pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))]);
  }
  return Weight(coords);
}

namespace {

std::vector<long> distinct_desc(Rng& rng, int count, long radius) {
  std::vector<long> all;
  for (long v = -radius; v <= radius; ++v) all.push_back(v);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(count));
  std::sort(all.rbegin(), all.rend());
  return all;
}

}  // namespace

Weight random_dominant(Rng& rng, int n, int ell, long radius, const Scalar& s) {
  if (2 * radius + 1 < std::max(ell, n - ell)) throw DomainError("radius too small for distinct offsets");
  std::vector<Scalar> coords;
  for (long v : distinct_desc(rng, ell, radius)) coords.push_back(s + Scalar(v));
  for (long v : distinct_desc(rng, n - ell, radius)) coords.push_back(Scalar(v) - s);
  return Weight(coords);
}

Weight random_in_lambda(Rng& rng, int n, int ell, long radius, const Scalar& s) {
  std::vector<Scalar> coords;
  for (int i = 0; i < n; ++i) {
    const Scalar v(uniform(rng, -radius, radius));
    coords.push_back(i < ell ? s + v : v - s);
  }
  return Weight(coords);
}

std::vector<long> random_partition(Rng& rng, int max_size, int max_parts) {
  long remaining = uniform(rng, 0, max_size);
  std::vector<long> parts;
  long cap = remaining;
  while (remaining > 0 && static_cast<int>(parts.size()) < max_parts) {
    const long p = uniform(rng, 1, std::min(cap, remaining));
    parts.push_back(p);
    remaining -= p;
    cap = p;
  }
  return parts;
}

}  // namespace qblocks::oracle
