#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qblocks/weight.hpp"

namespace qblocks {

/// Maximum number of mutually orthogonal roots alpha with (lambda, alpha-bar)
/// = 0, i.e. a maximum matching in the graph joining i, j when
/// lambda_i + lambda_j = 0.
int atypicality(const Weight& lambda);

/// What survives cancelling every pair {v, -v}: the central-character
/// invariant. Sorted structurally.
std::vector<Scalar> central_core(const Weight& lambda);

bool same_central_char(const Weight& lambda, const Weight& mu);

/// chi_lambda = chi_mu and mu - lambda in Z Phi.
bool linked_sim(const Weight& lambda, const Weight& mu);

struct WitnessPair {
  Root alpha;
  Scalar k;
  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

/// mu = w(lambda - sum_j k_j alpha_j) with disjoint alpha_j and
/// (lambda, alpha_j-bar) = 0.
struct LinkageWitness {
  Permutation w;
  std::vector<WitnessPair> pairs;
  friend bool operator==(const LinkageWitness&, const LinkageWitness&) = default;
};

Weight replay_witness(const Weight& lambda, const LinkageWitness& witness);
/// Structural checks plus exact replay onto mu.
bool witness_is_valid(const Weight& lambda, const Weight& mu, const LinkageWitness& witness);

/// All sets of disjoint index pairs {i < j} with lambda_i + lambda_j = 0,
/// ordered by size and then lexicographically.
std::vector<std::vector<Root>> zero_sum_matchings(const Weight& lambda);

/// Integer-difference class id of each coordinate; w is in W_lambda iff it
/// preserves these ids.
std::vector<int> integral_classes(const Weight& lambda);
bool in_integral_weyl_group(const Permutation& w, const Weight& lambda);

/// Search bound for the integer shifts: max |integer part of mu_i - lambda_i| + n.
long approx_search_bound(const Weight& lambda, const Weight& mu);

/// Witness for lambda ~approx~ mu with w in W_lambda and integer |k| <= bound,
/// first in (lexicographic w, matching order). An empty result means no
/// witness within the bound, not a proof of non-linkage. Parallel over w.
std::optional<LinkageWitness> linked_approx(const Weight& lambda, const Weight& mu);
/// Serial reference of linked_approx; returns the same witness.
std::optional<LinkageWitness> linked_approx_serial(const Weight& lambda, const Weight& mu);

/// Lexicographic rank -> permutation of 1..n.
Permutation unrank_permutation(long rank, int n);
long factorial(int n);

/// Element of the free abelian group on {eps_a : a in Z}.
class WtVector {
 public:
  void add(long a, long coefficient);
  long coefficient(long a) const;
  const std::map<long, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string str() const;

  WtVector& operator+=(const WtVector& other);
  friend WtVector operator+(WtVector a, const WtVector& b) { return a += b; }
  friend bool operator==(const WtVector&, const WtVector&) = default;

 private:
  std::map<long, long> terms_;
};

/// sum_{i<=ell} eps_{lambda_i - s} - sum_{i>ell} eps_{-(lambda_i + s)}.
WtVector wt(const Weight& lambda, const Scalar& s, int ell);

}  // namespace qblocks
