#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "qblocks/charring.hpp"
#include "qblocks/errors.hpp"

using namespace qt;

namespace {

Weight shift(const Weight& w, std::initializer_list<long> d) {
  Weight out = w;
  std::size_t k = 0;
  for (long x : d) out[k++] += Scalar(x);
  return out;
}

int permutation_sign(const Permutation& w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) sign = -sign;
    }
  }
  return sign;
}

/// sum over w in S_ell x S_{n-ell} of sign(w) ch M(w zeta), from Kostant
/// counts, truncated below zeta at the given depth.
FormalCharacter alternating_verma_sum(const Weight& zeta, int ell, long depth) {
  const int n = zeta.n();
  FormalCharacter out(zeta, depth);
  Permutation w = identity_permutation(n);
  std::vector<Permutation> group;
  do {
    bool keeps = true;
    for (int i = 0; i < n; ++i) keeps &= (i < ell) == (w[static_cast<std::size_t>(i)] <= ell);
    if (keeps) group.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  for (const auto& p : group) {
    const Weight top = weyl_apply(p, zeta);
    const auto h = weight_height(zeta, top);
    REQUIRE(h.has_value());
    if (*h > depth) continue;
    for (const auto& [mu, c] : oracle::verma_kostant(top, depth - *h).weighted_terms()) {
      out.add_term(mu, permutation_sign(p) * c);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("charring") {
  TEST_CASE("heights") {
    CHECK(offset_height({-1, 1}) == 1);
    CHECK(offset_height({-1, 0, 1}) == 2);
    CHECK_FALSE(offset_height({1, -1}).has_value());
    CHECK_FALSE(offset_height({1, 0}).has_value());
    CHECK(weight_height(Weight{s, -s}, Weight{s - q(2), q(2) - s}) == 2);
    CHECK_FALSE(weight_height(Weight{s, -s}, Weight{s + q(1, 2), -s - q(1, 2)}).has_value());
  }

  TEST_CASE("Verma characters") {
    const auto a = verma_character(Weight{pi}, 5);
    CHECK(a.terms().size() == 1);
    CHECK(a.coefficient(Weight{pi}) == 2);

    const Weight l{pi, -pi};
    const auto b = verma_character(l, 2);
    CHECK(b.terms().size() == 3);
    CHECK(b.coefficient(l) == 2);
    CHECK(b.coefficient(shift(l, {-1, 1})) == 4);
    CHECK(b.coefficient(shift(l, {-2, 2})) == 4);

    const auto c = verma_character(Weight{1, 0}, 1);
    CHECK(c.terms().size() == 2);
    CHECK(c.coefficient(Weight{1, 0}) == 2);
    CHECK(c.coefficient(Weight{0, 1}) == 4);
    CHECK(verma_character(Weight{0, 0}, 0).coefficient(Weight{0, 0}) == 1);
  }

  TEST_CASE("Verma characters match Kostant counts") {
    auto g = rng(3);
    const std::vector<Scalar> pool{q(0), q(1), q(-2), q(1, 2), pi, -pi, s + q(1)};
    for (int t = 0; t < 60; ++t) {
      const Weight w = oracle::random_weight(g, static_cast<int>(oracle::uniform(g, 1, 4)), pool);
      const long d = oracle::uniform(g, 0, 4);
      CHECK(verma_character(w, d) == oracle::verma_kostant(w, d));
    }
  }

  TEST_CASE("Verma coefficients grow along root rays") {
    const Weight l{s, q(1) - s, -s - q(2)};
    const auto ch = verma_character(l, 6);
    for (const auto& [mu, c] : ch.weighted_terms()) CHECK(c > 0);
    for (int k = 0; k < 5; ++k) {
      const Weight a = shift(l, {-k, k, 0});
      const Weight b = shift(l, {-k - 1, k + 1, 0});
      CHECK(ch.coefficient(a) <= ch.coefficient(b));
    }
  }

  TEST_CASE("Levi typical characters") {
    const auto a = levi_typical_character(Weight{s, -s}, 1);
    CHECK(a.terms().size() == 1);
    CHECK(a.coefficient(Weight{s, -s}) == 2);

    const auto b = levi_typical_character(Weight{1, 0}, 2);
    CHECK(b.terms().size() == 2);
    CHECK(b.coefficient(Weight{1, 0}) == 2);
    CHECK(b.coefficient(Weight{0, 1}) == 2);

    const auto c = levi_typical_character(Weight{2, 0}, 2);
    CHECK(c == levi_typical_character(Weight{2, 0}, 2, LeviRoute::SchurProduct));
    for (const auto& [mu, coef] : c.weighted_terms()) {
      CHECK(coef > 0);
      CHECK(c.coefficient(Weight{mu[1], mu[0]}) == coef);
    }
    CHECK(c.coefficient(Weight{2, 0}) == 2);

    CHECK_THROWS_AS(levi_typical_character(Weight{0, 1}, 2), DomainError);
    CHECK_THROWS_AS(levi_typical_character(Weight{1, -1}, 2), DomainError);
  }

  TEST_CASE("Levi characters equal the alternating Verma sum") {
    auto g = rng(13);
    for (int t = 0; t < 40; ++t) {
      const int n = static_cast<int>(oracle::uniform(g, 1, 3));
      const int ell = oracle::uniform(g, 0, 1) ? n : 0;
      const Weight z = oracle::random_dominant(g, n, ell, 3, s);
      const long d = oracle::uniform(g, 0, 4);
      CHECK(levi_typical_character(z, ell).truncated(d) == alternating_verma_sum(z, ell, d));
    }
  }

  TEST_CASE("Levi character properties") {
    auto g = rng(17);
    for (int t = 0; t < 80; ++t) {
      const int n = static_cast<int>(oracle::uniform(g, 1, 4));
      const int ell = static_cast<int>(oracle::uniform(g, 0, n));
      const Weight z = oracle::random_dominant(g, n, ell, 3, s);
      const auto a = levi_typical_character(z, ell);
      CHECK(a == levi_typical_character(z, ell, LeviRoute::SchurProduct));
      CHECK(a.coefficient(z) == clifford_dimension(n));
      for (const auto& [mu, c] : a.weighted_terms()) {
        CHECK(c > 0);
        // Symmetric under adjacent swaps inside each group.
        for (int i = 0; i + 1 < n; ++i) {
          if (i + 1 == ell) continue;
          CHECK(a.coefficient(weyl_apply([&] {
            Permutation p = identity_permutation(n);
            std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
            return p;
          }(), mu)) == c);
        }
      }
    }
  }

  TEST_CASE("parabolic Verma characters") {
    const Weight z{s, -s};
    for (long d = 0; d <= 5; ++d) CHECK(parabolic_verma_character(z, 1, d) == verma_character(z, d));
    CHECK(parabolic_verma_character(Weight{s}, 1, 3) == FormalCharacter::monomial(Weight{s}, 2, 3));

    const Weight y{s, q(1) - s, q(-1) - s};
    const auto k = parabolic_verma_character(y, 1, 1);
    CHECK(k.terms().size() == 3);
    CHECK(k.coefficient(y) == 4);
    CHECK(k.coefficient(shift(y, {-1, 1, 0})) == 8);
    CHECK(k.coefficient(shift(y, {0, -1, 1})) == 8);
    CHECK(k.coefficient(shift(y, {-1, 0, 1})) == 0);

    CHECK_THROWS_AS(parabolic_verma_character(Weight{s - q(1), s, -s}, 2, 1), DomainError);
  }

  TEST_CASE("parabolic Verma characters equal the alternating Verma sum") {
    auto g = rng(19);
    for (int t = 0; t < 60; ++t) {
      const int n = static_cast<int>(oracle::uniform(g, 2, 4));
      const int ell = static_cast<int>(oracle::uniform(g, 1, n - 1));
      const Weight z = oracle::random_dominant(g, n, ell, 3, s);
      const long d = oracle::uniform(g, 0, 3);
      CHECK(parabolic_verma_character(z, ell, d) == alternating_verma_sum(z, ell, d));
    }
    for (long d = 0; d <= 6; ++d) {
      const Weight z{s + q(2), q(-3) - s};
      CHECK(parabolic_verma_character(z, 1, d) == verma_character(z, d));
    }
  }

  TEST_CASE("arrow relation") {
    CHECK(arrow_a(Weight{s, -s}, Weight{s + q(1), -s}, 0, s, 1));
    CHECK(arrow_a(Weight{s, -s}, Weight{s, q(1) - s}, -1, s, 1));
    CHECK_FALSE(arrow_a(Weight{s, -s}, Weight{s + q(1), -s}, 1, s, 1));
    CHECK_FALSE(arrow_a(Weight{s, -s}, Weight{s + q(1), q(1) - s}, 0, s, 1));
  }

  TEST_CASE("translation characters") {
    const Weight z{s, -s};
    for (long d = 0; d <= 3; ++d) {
      CHECK(translate_char(TranslationKind::F, 0, z, s, 1, d) ==
            parabolic_verma_character(Weight{s + q(1), -s}, 1, d).scaled(2));
      CHECK(translate_char(TranslationKind::F, 5, z, s, 1, d).is_zero());
    }
    const Weight top{s + q(1), -s};
    const auto e = translate_char(TranslationKind::E, 0, top, s, 1, 3);
    CHECK(e.anchor() == Weight{s + q(1), -s - q(1)});
    const auto expected = parabolic_verma_character(Weight{s, -s}, 1, 2).scaled(2) +
                          parabolic_verma_character(Weight{s + q(1), -s - q(1)}, 1, 3).scaled(2);
    CHECK(e.weighted_terms() == expected.weighted_terms());
    CHECK(parse_translation_kind("E") == TranslationKind::E);
    CHECK_THROWS_AS(parse_translation_kind("G"), ParseError);
  }

  TEST_CASE("tensor product and projection reproduce translation") {
    CHECK(tensor_project_verify(Weight{s, -s}, s, 1, 0, TranslationKind::F, 3).ok);
    CHECK(tensor_project_verify(Weight{s, q(1) - s, q(-1) - s}, s, 1, 0, TranslationKind::E, 2).ok);
    for (long a = -2; a <= 2; ++a) {
      CHECK(tensor_project_verify(Weight{s + q(a)}, s, 1, a, TranslationKind::F, 0).ok);
      CHECK(tensor_project_verify(Weight{s + q(1)}, s, 1, a, TranslationKind::E, 0).ok);
    }
    const auto c = tensor_project_verify(Weight{s + q(1), -s}, s, 1, 0, TranslationKind::E, 2);
    CHECK(c.ok);
    CHECK(c.projected == c.expected);
    CHECK_FALSE(c.flags.empty());
  }

  TEST_CASE("multiplication laws") {
    const Weight l{s, -s, q(1) - s};
    const auto a = verma_character(l, 3);
    const auto b = root_factor(3, {1, 3}, 3);
    const auto c = root_factor(3, {2, 3}, 3);
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, b) == multiply_serial(a, b));
    const auto big = verma_character(Weight{s, q(1) - s, q(-1) - s, q(-2) - s}, 6);
    REQUIRE(big.terms().size() >= 64);
    CHECK(multiply(big, big) == multiply_serial(big, big));
  }
}
