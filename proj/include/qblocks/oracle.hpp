#pragma once

// Independent brute-force references used by the tests and by selfcheck.
// Nothing in the main library depends on these.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qblocks/charring.hpp"
#include "qblocks/linkage.hpp"
#include "qblocks/poly.hpp"

namespace qblocks::oracle {

using Rng = std::mt19937_64;

/// Semistandard tableaux of the (nonnegative) partition shape with entries
/// 1..m, summed as monomials x^content.
LaurentPoly schur_tableaux(const std::vector<long>& shape, int m);

/// Maximum over all sets of disjoint index pairs {i, j} with
/// lambda_i + lambda_j = 0, by exhaustive recursion.
int atypicality_brute(const Weight& lambda);

/// Searches all of S_n and all zero-sum matchings for mu = w(lambda - sum
/// k alpha) with arbitrary scalar k (central-character criterion).
std::optional<LinkageWitness> central_witness_search(const Weight& lambda, const Weight& mu);

/// All permutations of lambda - k alpha, smallest k first, until one is
/// dominant in Lambda+_{s^ell}.
std::optional<std::pair<Weight, long>> lambda_minus_brute(const Weight& lambda, const Scalar& s, int ell,
                                                          long max_k = 8);

/// Verma character from the Kostant-type count: each way of writing
/// lambda - mu as sum n_alpha alpha contributes 2^{#alpha with n_alpha > 0}.
FormalCharacter verma_kostant(const Weight& lambda, long depth);

/// Random inputs.
Scalar generic_symbol();  // the symbol "s"
Weight random_weight(Rng& rng, int n, const std::vector<Scalar>& pool);
/// Element of Lambda+_{s^ell}(n): s + distinct integers, then -s + distinct
/// integers, each group strictly decreasing, offsets in [-radius, radius].
Weight random_dominant(Rng& rng, int n, int ell, long radius, const Scalar& s);
/// Same shape but not necessarily dominant.
Weight random_in_lambda(Rng& rng, int n, int ell, long radius, const Scalar& s);
std::vector<long> random_partition(Rng& rng, int max_size, int max_parts);
long uniform(Rng& rng, long lo, long hi);

}  // namespace qblocks::oracle
