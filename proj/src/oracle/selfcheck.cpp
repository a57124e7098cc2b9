#include "qblocks/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qblocks/blockone.hpp"
#include "qblocks/charring.hpp"
#include "qblocks/errors.hpp"
#include "qblocks/linkage.hpp"
#include "qblocks/oracle.hpp"
#include "qblocks/reduce.hpp"
#include "qblocks/schur.hpp"
#include "qblocks/zigzag.hpp"

namespace qblocks {

namespace {

using oracle::Rng;
using oracle::uniform;

void expect(SuiteResult& r, bool ok, const std::string& message) {
  if (ok) {
    ++r.passed;
    return;
  }
  ++r.failed;
  if (r.failures.size() < 5) r.failures.push_back(message);
}

Scalar random_scalar(Rng& rng) {
  Scalar x(Rational(uniform(rng, -7, 7), uniform(rng, 1, 4)));
  if (uniform(rng, 0, 1)) x += Scalar::symbol(uniform(rng, 0, 1) ? "s" : "t", Rational(uniform(rng, -3, 3), uniform(rng, 1, 2)));
  return x;
}

std::vector<Scalar> mixed_pool() {
  const Scalar s = oracle::generic_symbol();
  return {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(Rational(1, 2)), Scalar(Rational(-1, 2)),
          Scalar(Rational(3, 2)), s, -s, s + Scalar(1), Scalar(1) - s, Scalar(Rational(1, 5)), Scalar(Rational(-1, 5))};
}

void suite_scalar(Rng& rng, long cases, const SelfcheckOptions&, SuiteResult& r) {
  for (long c = 0; c < cases; ++c) {
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    expect(r, Scalar::parse(a.str()) == a, "round trip of " + a.str());
    expect(r, (a - b).is_integer() == (coset_class(a) == coset_class(b)),
           "coset test disagrees with integrality for " + a.str() + ", " + b.str());
    const CosetClass k = coset_class(a);
    expect(r, k.paired().paired() == k, "pairing is not an involution at " + a.str());
    expect(r, (k.paired() == k) == (k.kind != CosetKind::Irr), "self-paired classes are not INT/HALF at " + a.str());
  }
}

void suite_atypicality(Rng& rng, long cases, const SelfcheckOptions&, SuiteResult& r) {
  const auto pool = mixed_pool();
  for (long c = 0; c < cases; ++c) {
    const Weight w = oracle::random_weight(rng, static_cast<int>(uniform(rng, 1, 6)), pool);
    expect(r, atypicality(w) == oracle::atypicality_brute(w), "atypicality of " + w.str());
  }
}

void suite_central(Rng& rng, long cases, const SelfcheckOptions&, SuiteResult& r) {
  const Scalar s = oracle::generic_symbol();
  const std::vector<Scalar> pool{Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), s, -s, s + Scalar(1)};
  for (long c = 0; c < cases; ++c) {
    const int n = static_cast<int>(uniform(rng, 1, 4));
    const Weight a = oracle::random_weight(rng, n, pool);
    Weight b = oracle::random_weight(rng, n, pool);
    if (uniform(rng, 0, 1)) {
      Permutation w = identity_permutation(n);
      std::shuffle(w.begin(), w.end(), rng);
      b = weyl_apply(w, a);
    }
    const auto witness = oracle::central_witness_search(a, b);
    expect(r, same_central_char(a, b) == witness.has_value(), "central character of " + a.str() + " vs " + b.str());
    if (witness) expect(r, witness_is_valid(a, b, *witness), "central witness does not replay for " + a.str());
  }
}

void suite_approx(Rng& rng, long cases, const SelfcheckOptions&, SuiteResult& r) {
  const Scalar s = oracle::generic_symbol();
  const std::vector<Scalar> pool{Scalar(0), Scalar(1), Scalar(-1), Scalar(2), s, -s, s + Scalar(1), Scalar(-1) - s};
  for (long c = 0; c < cases; ++c) {
    const int n = static_cast<int>(uniform(rng, 1, 4));
    const Weight a = oracle::random_weight(rng, n, pool);
    // Build a linked partner: shift along zero-sum pairs, then permute.
    Weight b = a;
    const auto matchings = zero_sum_matchings(a);
    for (const auto& alpha : matchings.back()) {
      const long k = uniform(rng, -2, 2);
      b[static_cast<std::size_t>(alpha.i - 1)] -= Scalar(k);
      b[static_cast<std::size_t>(alpha.j - 1)] += Scalar(k);
    }
    Permutation w = identity_permutation(n);
    std::shuffle(w.begin(), w.end(), rng);
    if (in_integral_weyl_group(w, a)) b = weyl_apply(w, b);
    const auto found = linked_approx(a, b);
    expect(r, found.has_value(), "no approx witness for constructed pair " + a.str() + ", " + b.str());
    if (found) {
      expect(r, witness_is_valid(a, b, *found), "approx witness does not replay for " + a.str());
      expect(r, linked_sim(a, b), "approx-linked pair not ~-linked: " + a.str() + ", " + b.str());
      expect(r, linked_approx_serial(a, b) == found, "serial and parallel witnesses differ for " + a.str());
    }
  }
}

void suite_reduce(Rng& rng, long cases, const SelfcheckOptions&, SuiteResult& r) {
  const auto pool = mixed_pool();
  for (long c = 0; c < cases; ++c) {
    const Weight w = oracle::random_weight(rng, static_cast<int>(uniform(rng, 1, 6)), pool);
    const auto res = normalize_block(w);
    expect(r, replay_moves(w, res.moves) == res.reduced, "replay mismatch for " + w.str());
    const auto again = normalize_block(res.reduced);
    expect(r, again.moves.empty() && again.levi == res.levi, "normal form not idempotent for " + w.str());
    int total = 0;
    for (const auto& f : res.levi) total += f.size;
    expect(r, total == w.n(), "Levi sizes do not add up for " + w.str());
  }
}

void suite_schur(Rng& rng, long cases, const SelfcheckOptions&, SuiteResult& r) {
  for (long c = 0; c < cases; ++c) {
    const int m = static_cast<int>(uniform(rng, 1, 4));
    const auto shape = oracle::random_partition(rng, 6, 5);
    expect(r, schur_jt(shape, m) == oracle::schur_tableaux(shape, m), "Jacobi-Trudi vs tableaux at m=" + std::to_string(m));
    const auto idx = PartitionIndex::make(shape, m);
    if (!idx) continue;
    LaurentPoly sum(m);
    for (const auto& nu : pieri_expand(*idx)) sum += schur_jt(nu);
    LaurentPoly e1(m);
    for (int i = 0; i < m; ++i) e1 += LaurentPoly::variable(m, i);
    expect(r, schur_jt(*idx) * e1 == sum, "Pieri identity at m=" + std::to_string(m));
  }
}

void suite_levi(Rng& rng, long cases, const SelfcheckOptions&, SuiteResult& r) {
  const Scalar s = oracle::generic_symbol();
  for (long c = 0; c < cases; ++c) {
    const int n = static_cast<int>(uniform(rng, 1, 4));
    const int ell = static_cast<int>(uniform(rng, 0, n));
    const Weight z = oracle::random_dominant(rng, n, ell, 3, s);
    const auto a = levi_typical_character(z, ell, LeviRoute::Alternant);
    const auto b = levi_typical_character(z, ell, LeviRoute::SchurProduct);
    expect(r, a == b, "Levi character routes differ at " + z.str());
    bool positive = true;
    for (const auto& [off, v] : a.terms()) positive &= v > 0;
    expect(r, positive, "negative Levi coefficient at " + z.str());
    expect(r, a.coefficient(z) == clifford_dimension(n), "Levi top coefficient at " + z.str());
  }
}

void suite_verma(Rng& rng, long cases, const SelfcheckOptions&, SuiteResult& r) {
  const auto pool = mixed_pool();
  for (long c = 0; c < cases; ++c) {
    const Weight w = oracle::random_weight(rng, static_cast<int>(uniform(rng, 1, 3)), pool);
    const long d = uniform(rng, 0, 3);
    expect(r, verma_character(w, d) == oracle::verma_kostant(w, d), "Verma character of " + w.str());
  }
}

void suite_translation(Rng& rng, long cases, const SelfcheckOptions&, SuiteResult& r) {
  const Scalar s = oracle::generic_symbol();
  for (long c = 0; c < cases; ++c) {
    const int n = static_cast<int>(uniform(rng, 2, 4));
    const int ell = static_cast<int>(uniform(rng, 1, n - 1));
    const Weight z = oracle::random_dominant(rng, n, ell, 2, s);
    const long a = uniform(rng, -3, 3);
    const auto kind = uniform(rng, 0, 1) ? TranslationKind::E : TranslationKind::F;
    const long d = uniform(rng, 0, 3);
    const auto check = tensor_project_verify(z, s, ell, a, kind, d);
    expect(r, check.ok, "translation identity at " + z.str() + ": " + check.detail);
  }
}

Weight random_atypical_one(Rng& rng, int n, int ell, const Scalar& s) {
  for (;;) {
    const Weight w = oracle::random_dominant(rng, n, ell, 3, s);
    if (atypicality(w) == 1) return w;
  }
}

void suite_blockone(Rng& rng, long cases, const SelfcheckOptions&, SuiteResult& r) {
  const Scalar s = oracle::generic_symbol();
  for (long c = 0; c < cases; ++c) {
    const int n = static_cast<int>(uniform(rng, 2, 5));
    const int ell = static_cast<int>(uniform(rng, 1, n - 1));
    const Weight w = random_atypical_one(rng, n, ell, s);
    const auto step = lambda_minus_step(w, s, ell);
    const auto brute = oracle::lambda_minus_brute(w, s, ell);
    expect(r, brute && brute->first == step.weight && brute->second == step.k, "lambda- of " + w.str());
    expect(r, lambda_plus(step.weight, s, ell) == w, "(lambda-)+ != lambda at " + w.str());
    expect(r, lambda_minus(lambda_plus(w, s, ell), s, ell) == w, "(lambda+)- != lambda at " + w.str());
  }
}

void suite_gl(Rng& rng, long cases, const SelfcheckOptions&, SuiteResult& r) {
  const Scalar s = oracle::generic_symbol();
  for (long c = 0; c < cases; ++c) {
    const int n = static_cast<int>(uniform(rng, 1, 5));
    const int ell = static_cast<int>(uniform(rng, 0, n));
    const Weight a = oracle::random_in_lambda(rng, n, ell, 2, s);
    const Weight b = oracle::random_in_lambda(rng, n, ell, 2, s);
    const auto ga = to_gl(a, s, ell);
    const auto gb = to_gl(b, s, ell);
    expect(r, linked_sim(a, b) == gl_linked(ga, gb), "linkage transport at " + a.str() + ", " + b.str());
    expect(r, wt(a, s, ell) == gl_wt(ga), "wt transport at " + a.str());
    expect(r, gl_atypicality(ga) == atypicality(a), "atypicality transport at " + a.str());
    expect(r, from_gl(ga, s) == a, "gl round trip at " + a.str());
  }
}

void suite_zigzag(Rng&, long cases, const SelfcheckOptions& options, SuiteResult& r) {
  if (cases <= 0) return;
  for (int window = 1; window <= 3; ++window) {
    const ZigzagAlgebra alg(window, options.flip_zigzag_relation);
    for (const auto& f : alg.relation_failures()) expect(r, false, f);
    const auto assoc = alg.associativity_failures(1);
    expect(r, assoc.empty(), assoc.empty() ? "" : "associativity: " + assoc.front());
    const auto series = alg.radical_series();
    expect(r, series.loewy_length == 3, "Loewy length at window " + std::to_string(window));
    expect(r, series.semisimple_quotient_dim == 2 * window + 1 && series.quotient_is_split,
           "semisimple quotient at window " + std::to_string(window));
    for (int i = -window + 1; i < window; ++i) {
      expect(r, alg.hom_dim(i, i) == 2 && alg.hom_dim(i, i + 1) == 1 && alg.hom_dim(i, i - 1) == 1,
             "hom dimensions at vertex " + std::to_string(i));
      const auto sub = alg.projective_submodules(i);
      expect(r, sub.complete && sub.proper.size() == 4 && sub.socle == sub.rad_squared,
             "projective submodules at vertex " + std::to_string(i));
    }
  }
}

using SuiteFn = std::function<void(Rng&, long, const SelfcheckOptions&, SuiteResult&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all{
      {"scalar", suite_scalar},       {"atypicality", suite_atypicality}, {"central-char", suite_central},
      {"approx-witness", suite_approx}, {"reduce", suite_reduce},        {"schur", suite_schur},
      {"levi-character", suite_levi}, {"verma-character", suite_verma},  {"translation", suite_translation},
      {"lambda-pm", suite_blockone},  {"gl-transport", suite_gl},       {"zigzag", suite_zigzag},
  };
  return all;
}

}  // namespace

std::vector<std::string> selfcheck_suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  return out;
}

bool SelfcheckReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

std::string SelfcheckReport::str() const {
  std::ostringstream out;
  for (const auto& s : suites) {
    out << s.name << ": " << s.passed << " passed, " << s.failed << " failed\n";
    for (const auto& f : s.failures) out << "  " << f << "\n";
  }
  out << (ok() ? "selfcheck: OK" : "selfcheck: FAILED") << "\n";
  return out.str();
}

SelfcheckReport selfcheck(const SelfcheckOptions& options) {
  const auto& all = suites();
  SelfcheckReport report;
  report.suites.resize(all.size());
  const long count = static_cast<long>(all.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < count; ++k) {
    auto& result = report.suites[static_cast<std::size_t>(k)];
    result.name = all[static_cast<std::size_t>(k)].first;
    Rng rng(options.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(k));
    try {
      all[static_cast<std::size_t>(k)].second(rng, options.cases, options, result);
    } catch (const std::exception& e) {
      ++result.failed;
      result.failures.push_back(std::string("exception: ") + e.what());
    }
  }
  return report;
}

}  // namespace qblocks
