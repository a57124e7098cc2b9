#include <doctest.h>

#include "helpers.hpp"
#include "qblocks/blockone.hpp"
#include "qblocks/errors.hpp"

using namespace qt;

namespace {

std::vector<Weight> collision_family() {
  return {Weight{s, s - q(1), -s},           Weight{s + q(1), s, -s},
          Weight{s, s - q(1), s - q(2), -s}, Weight{s + q(2), s, q(1) - s, -s},
          Weight{s, q(1) - s, -s},           Weight{s, s - q(2), q(1) - s, -s}};
}

int ell_for(const Weight& w) {
  int ell = 0;
  for (const auto& c : w.coords()) ell += (c - s).is_integer() ? 1 : 0;
  return ell;
}

}  // namespace

TEST_SUITE("blockone") {
  TEST_CASE("lambda minus") {
    const auto a = lambda_minus_step(Weight{s, -s}, s, 1);
    CHECK(a.weight == Weight{s - q(1), q(1) - s});
    CHECK(a.k == 1);
    const auto b = lambda_minus_step(Weight{s, s - q(1), -s}, s, 2);
    CHECK(b.k == 2);
    CHECK(b.weight == Weight{s - q(1), s - q(2), q(2) - s});
    const auto c = lambda_minus_step(Weight{s + q(1), s, -s}, s, 2);
    CHECK(c.k == 1);
    CHECK(c.weight == Weight{s + q(1), s - q(1), q(1) - s});
    CHECK(atypical_root(Weight{s, s - q(1), -s}, s, 2) == Root{1, 3});
  }

  TEST_CASE("lambda plus") {
    CHECK(lambda_plus(Weight{s - q(1), q(1) - s}, s, 1) == Weight{s, -s});
    CHECK(lambda_plus(Weight{s - q(1), s - q(2), q(2) - s}, s, 2) == Weight{s, s - q(1), -s});
    for (const auto& w : collision_family()) {
      const int ell = ell_for(w);
      CAPTURE(w.str());
      CHECK(lambda_minus(lambda_plus(w, s, ell), s, ell) == w);
      CHECK(lambda_plus(lambda_minus(w, s, ell), s, ell) == w);
    }
  }

  TEST_CASE("lambda +- preconditions") {
    CHECK_THROWS_AS(lambda_minus(Weight{s, q(1) - s}, s, 1), DomainError);
    CHECK_THROWS_AS(lambda_minus(Weight{s, -s, s - q(1), q(1) - s}, s, 2), DomainError);
    CHECK_THROWS_AS(lambda_minus(Weight{q(1, 2), q(-1, 2)}, q(1, 2), 1), DomainError);
    CHECK_THROWS_AS(lambda_minus(Weight{s - q(1), s, -s}, s, 2), DomainError);
  }

  TEST_CASE("lambda minus matches the permutation search") {
    auto g = rng(23);
    int tested = 0;
    while (tested < 150) {
      const int n = static_cast<int>(oracle::uniform(g, 2, 5));
      const int ell = static_cast<int>(oracle::uniform(g, 1, n - 1));
      const Weight w = oracle::random_dominant(g, n, ell, 3, s);
      if (atypicality(w) != 1) continue;
      ++tested;
      const auto step = lambda_minus_step(w, s, ell);
      const auto brute = oracle::lambda_minus_brute(w, s, ell);
      REQUIRE(brute.has_value());
      CHECK(brute->first == step.weight);
      CHECK(brute->second == step.k);
      CHECK(lambda_plus(step.weight, s, ell) == w);
      CHECK(lambda_minus(lambda_plus(w, s, ell), s, ell) == w);
    }
  }

  TEST_CASE("q(2) chart") {
    const auto chart = block_chart(Weight{s, -s}, s, 1, 2);
    REQUIRE(chart.weights.size() == 5);
    for (int k = -2; k <= 2; ++k) CHECK(chart.at(k) == Weight{s + q(k), -s - q(k)});
    for (int r = 0; r < 5; ++r) {
      for (int c = 0; c < 5; ++c) {
        const int expected = (r == c || r == c + 1) ? 1 : 0;
        CHECK(chart.D[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == expected);
      }
    }
    CHECK(chart.C == transpose_product(chart.D));
    for (int i = -1; i <= 1; ++i) {
      CHECK(chart.cartan(i, i - 1) == 1);
      CHECK(chart.cartan(i, i) == 2);
      CHECK(chart.cartan(i, i + 1) == 1);
    }
    CHECK(chart.edges == std::vector<std::pair<int, int>>{{-2, -1}, {-1, 0}, {0, 1}, {1, 2}});
    CHECK(chart.is_boundary(2));
    CHECK(chart.is_boundary(-2));
    CHECK_FALSE(chart.is_boundary(0));
  }

  TEST_CASE("degenerate and collision charts") {
    const auto zero = block_chart(Weight{s, -s}, s, 1, 0);
    CHECK(zero.weights.size() == 1);
    CHECK(zero.D == std::vector<std::vector<int>>{{1}});
    CHECK(zero.C == std::vector<std::vector<int>>{{1}});
    CHECK(zero.is_boundary(0));

    const Weight w{s, s - q(1), -s};
    const auto chart = block_chart(w, s, 2, 1);
    CHECK(chart.at(-1) == lambda_minus(w, s, 2));
    CHECK(chart.at(0) == w);
    CHECK(chart.at(1) == lambda_plus(w, s, 2));
  }

  TEST_CASE("chart chains are linked and mutually inverse") {
    for (const auto& w : collision_family()) {
      const int ell = ell_for(w);
      const auto chart = block_chart(w, s, ell, 3);
      for (int i = -3; i < 3; ++i) {
        CHECK(lambda_plus(chart.at(i), s, ell) == chart.at(i + 1));
        CHECK(lambda_minus(chart.at(i + 1), s, ell) == chart.at(i));
        const auto witness = linked_approx(chart.at(i), chart.at(i + 1));
        REQUIRE(witness.has_value());
        CHECK(witness_is_valid(chart.at(i), chart.at(i + 1), *witness));
      }
      CHECK(chart.C == transpose_product(chart.D));
    }
  }

  TEST_CASE("parity rules") {
    CHECK(pi_split(2));
    CHECK_FALSE(pi_split(3));
    CHECK(tau_parity(2) == Parity::Pi);
    CHECK(tau_parity(4) == Parity::Identity);
    CHECK(tau_parity(6) == Parity::Pi);
    CHECK_THROWS_AS(tau_parity(3), DomainError);
  }

  TEST_CASE("gl correspondence") {
    const GlWeight a = to_gl(Weight{s, -s}, s, 1);
    CHECK(a.coords == std::vector<long>{1, -1});
    CHECK(from_gl(a, s) == Weight{s, -s});
    CHECK(to_gl(Weight{s + q(1), -s}, s, 1).coords == std::vector<long>{2, -1});
    CHECK(gl_rho(2, 1) == std::vector<long>{-1, 1});
    CHECK(gl_rho(4, 2) == std::vector<long>{-2, -1, 1, 2});
    CHECK(gl_wt(a).is_zero());
    CHECK(gl_linked(a, a));
    CHECK(gl_linked(GlWeight{1, {1, -1}}, GlWeight{1, {2, -2}}));
    CHECK(gl_atypicality(GlWeight{1, {1, -1}}) == 1);
    CHECK(gl_atypicality(GlWeight{1, {5, -1}}) == 0);
    CHECK_THROWS_AS(to_gl(Weight{s, s}, s, 1), DomainError);
  }

  TEST_CASE("gl transport on random pairs") {
    auto g = rng(29);
    for (int t = 0; t < 300; ++t) {
      const int n = static_cast<int>(oracle::uniform(g, 1, 5));
      const int ell = static_cast<int>(oracle::uniform(g, 0, n));
      const Weight a = oracle::random_in_lambda(g, n, ell, 2, s);
      const Weight b = oracle::random_in_lambda(g, n, ell, 2, s);
      const auto ga = to_gl(a, s, ell);
      const auto gb = to_gl(b, s, ell);
      CHECK(from_gl(ga, s) == a);
      CHECK(wt(a, s, ell) == gl_wt(ga));
      CHECK(gl_atypicality(ga) == atypicality(a));
      CHECK(linked_sim(a, b) == gl_linked(ga, gb));
    }
  }
}
