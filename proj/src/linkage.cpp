#include "qblocks/linkage.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

#include <omp.h>

#include "qblocks/errors.hpp"

namespace qblocks {

namespace {

std::map<Scalar, int> value_counts(const Weight& lambda) {
  std::map<Scalar, int> counts;
  for (const auto& c : lambda.coords()) ++counts[c];
  return counts;
}

void require_same_n(const Weight& lambda, const Weight& mu) {
  if (lambda.n() != mu.n()) {
    throw DomainError("weights have different n (" + std::to_string(lambda.n()) + " vs " +
                      std::to_string(mu.n()) + ")");
  }
}

constexpr int kMaxSearchN = 10;

// Tries every matching for a fixed w; returns the first that maps lambda to mu.
std::optional<LinkageWitness> try_permutation(const Weight& lambda, const Weight& mu,
                                              const Permutation& w,
                                              const std::vector<std::vector<Root>>& matchings,
                                              long bound) {
  const auto n = static_cast<std::size_t>(lambda.n());
  std::vector<bool> fixed(n);
  for (std::size_t i = 0; i < n; ++i) {
    fixed[i] = lambda[i] == mu[static_cast<std::size_t>(w[i] - 1)];
  }
  for (const auto& matching : matchings) {
    std::vector<bool> covered(n, false);
    LinkageWitness witness{w, {}};
    bool ok = true;
    for (const auto& alpha : matching) {
      const auto i = static_cast<std::size_t>(alpha.i - 1);
      const auto j = static_cast<std::size_t>(alpha.j - 1);
      covered[i] = covered[j] = true;
      const Scalar k = lambda[i] - mu[static_cast<std::size_t>(w[i] - 1)];
      const auto kk = k.to_integer();
      if (!kk || std::labs(*kk) > bound || !(lambda[j] + k == mu[static_cast<std::size_t>(w[j] - 1)])) {
        ok = false;
        break;
      }
      witness.pairs.push_back({alpha, k});
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!covered[i] && !fixed[i]) ok = false;
    }
    if (ok) return witness;
  }
  return std::nullopt;
}

}  // namespace

int atypicality(const Weight& lambda) {
  const auto counts = value_counts(lambda);
  int matched = 0;
  for (const auto& [v, count] : counts) {
    if (v.is_zero()) {
      matched += count / 2;
      continue;
    }
    const Scalar neg = -v;
    if (!(v > neg)) continue;  // each pair {v, -v} once
    if (auto it = counts.find(neg); it != counts.end()) matched += std::min(count, it->second);
  }
  return matched;
}

std::vector<Scalar> central_core(const Weight& lambda) {
  const auto counts = value_counts(lambda);
  std::vector<Scalar> core;
  for (const auto& [v, count] : counts) {
    if (v.is_zero()) {
      if (count % 2) core.push_back(v);
      continue;
    }
    const Scalar neg = -v;
    const auto it = counts.find(neg);
    const int other = it == counts.end() ? 0 : it->second;
    for (int k = 0; k < count - other; ++k) core.push_back(v);
  }
  std::sort(core.begin(), core.end());
  return core;
}

bool same_central_char(const Weight& lambda, const Weight& mu) {
  require_same_n(lambda, mu);
  return central_core(lambda) == central_core(mu);
}

bool linked_sim(const Weight& lambda, const Weight& mu) {
  require_same_n(lambda, mu);
  const Weight diff = mu - lambda;
  Scalar total;
  for (const auto& c : diff.coords()) {
    if (!c.is_integer()) return false;
    total += c;
  }
  return total.is_zero() && same_central_char(lambda, mu);
}

Weight replay_witness(const Weight& lambda, const LinkageWitness& witness) {
  Weight shifted = lambda;
  for (const auto& p : witness.pairs) {
    shifted -= p.alpha.as_weight(lambda.n()).scaled(p.k.rational_part());
    if (!p.k.is_rational()) {
      // k may carry symbols when used for central-character witnesses
      const Scalar extra = p.k - Scalar(p.k.rational_part());
      shifted[static_cast<std::size_t>(p.alpha.i - 1)] -= extra;
      shifted[static_cast<std::size_t>(p.alpha.j - 1)] += extra;
    }
  }
  return weyl_apply(witness.w, shifted);
}

bool witness_is_valid(const Weight& lambda, const Weight& mu, const LinkageWitness& witness) {
  if (lambda.n() != mu.n() || !is_permutation(witness.w, lambda.n())) return false;
  std::vector<bool> used(static_cast<std::size_t>(lambda.n()) + 1, false);
  for (const auto& p : witness.pairs) {
    const auto& a = p.alpha;
    if (a.i < 1 || a.j < 1 || a.i > lambda.n() || a.j > lambda.n() || a.i == a.j) return false;
    if (used[static_cast<std::size_t>(a.i)] || used[static_cast<std::size_t>(a.j)]) return false;
    used[static_cast<std::size_t>(a.i)] = used[static_cast<std::size_t>(a.j)] = true;
    if (!bar_pairing(lambda, a).is_zero()) return false;
  }
  return replay_witness(lambda, witness) == mu;
}

std::vector<std::vector<Root>> zero_sum_matchings(const Weight& lambda) {
  const int n = lambda.n();
  std::vector<Root> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (bar_pairing(lambda, {i, j}).is_zero()) edges.push_back({i, j});
    }
  }
  std::vector<std::vector<Root>> out;
  std::vector<Root> current;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    out.push_back(current);
    for (std::size_t e = from; e < edges.size(); ++e) {
      const auto& r = edges[e];
      if (used[static_cast<std::size_t>(r.i)] || used[static_cast<std::size_t>(r.j)]) continue;
      used[static_cast<std::size_t>(r.i)] = used[static_cast<std::size_t>(r.j)] = true;
      current.push_back(r);
      grow(e + 1);
      current.pop_back();
      used[static_cast<std::size_t>(r.i)] = used[static_cast<std::size_t>(r.j)] = false;
    }
  };
  grow(0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<int> integral_classes(const Weight& lambda) {
  std::vector<int> ids(static_cast<std::size_t>(lambda.n()), -1);
  int next = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] >= 0) continue;
    ids[i] = next;
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (ids[j] < 0 && (lambda[i] - lambda[j]).is_integer()) ids[j] = next;
    }
    ++next;
  }
  return ids;
}

bool in_integral_weyl_group(const Permutation& w, const Weight& lambda) {
  if (!is_permutation(w, lambda.n())) return false;
  const auto ids = integral_classes(lambda);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (ids[i] != ids[static_cast<std::size_t>(w[i] - 1)]) return false;
  }
  return true;
}

long approx_search_bound(const Weight& lambda, const Weight& mu) {
  require_same_n(lambda, mu);
  long best = 0;
  for (int i = 0; i < lambda.n(); ++i) {
    Rational d = (mu[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(i)]).rational_part();
    d = abs(d);
    best = std::max(best, floor_rational(d));
  }
  return best + lambda.n();
}

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Permutation unrank_permutation(long rank, int n) {
  std::vector<int> pool = identity_permutation(n);
  Permutation w;
  w.reserve(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    const long f = factorial(k - 1);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    w.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return w;
}

std::optional<LinkageWitness> linked_approx_serial(const Weight& lambda, const Weight& mu) {
  require_same_n(lambda, mu);
  if (lambda.n() > kMaxSearchN) throw DomainError("witness search limited to n <= 10");
  const long bound = approx_search_bound(lambda, mu);
  const auto matchings = zero_sum_matchings(lambda);
  Permutation w = identity_permutation(lambda.n());
  do {
    if (!in_integral_weyl_group(w, lambda)) continue;
    if (auto found = try_permutation(lambda, mu, w, matchings, bound)) return found;
  } while (std::next_permutation(w.begin(), w.end()));
  return std::nullopt;
}

std::optional<LinkageWitness> linked_approx(const Weight& lambda, const Weight& mu) {
  require_same_n(lambda, mu);
  if (lambda.n() > kMaxSearchN) throw DomainError("witness search limited to n <= 10");
  const long bound = approx_search_bound(lambda, mu);
  const auto matchings = zero_sum_matchings(lambda);
  const long total = factorial(lambda.n());
  std::atomic<long> best_rank{total};
  std::optional<LinkageWitness> best;

#pragma omp parallel for schedule(dynamic, 32)
  for (long r = 0; r < total; ++r) {
    if (r >= best_rank.load(std::memory_order_relaxed)) continue;
    const Permutation w = unrank_permutation(r, lambda.n());
    if (!in_integral_weyl_group(w, lambda)) continue;
    auto found = try_permutation(lambda, mu, w, matchings, bound);
    if (!found) continue;
#pragma omp critical(qblocks_linked_approx)
    {
      if (r < best_rank.load()) {
        best_rank.store(r);
        best = std::move(found);
      }
    }
  }
  return best;
}

void WtVector::add(long a, long coefficient) {
  const long v = (terms_[a] += coefficient);
  if (v == 0) terms_.erase(a);
}

long WtVector::coefficient(long a) const {
  const auto it = terms_.find(a);
  return it == terms_.end() ? 0 : it->second;
}

std::string WtVector::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [a, c] : terms_) {
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (std::labs(c) != 1) out += std::to_string(std::labs(c)) + "*";
    out += "e(" + std::to_string(a) + ")";
  }
  return out;
}

WtVector& WtVector::operator+=(const WtVector& other) {
  for (const auto& [a, c] : other.terms_) add(a, c);
  return *this;
}

WtVector wt(const Weight& lambda, const Scalar& s, int ell) {
  if (!is_in_lambda(lambda, s, ell)) {
    throw DomainError("wt: weight " + lambda.str() + " is not in Lambda_{(" + s.str() + ")^" +
                      std::to_string(ell) + "}(" + std::to_string(lambda.n()) + ")");
  }
  WtVector out;
  for (int i = 0; i < lambda.n(); ++i) {
    const Scalar& c = lambda[static_cast<std::size_t>(i)];
    if (i < ell) {
      out.add(*(c - s).to_integer(), 1);
    } else {
      out.add(*(-(c + s)).to_integer(), -1);
    }
  }
  return out;
}

}  // namespace qblocks
