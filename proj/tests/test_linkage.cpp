#include <doctest.h>

#include "helpers.hpp"
#include "qblocks/errors.hpp"
#include "qblocks/json_io.hpp"
#include "qblocks/linkage.hpp"

using namespace qt;

TEST_SUITE("linkage") {
  TEST_CASE("atypicality") {
    CHECK(atypicality(Weight{1, -1}) == 1);
    CHECK(atypicality(Weight{pi, -pi, -pi}) == 1);
    CHECK(atypicality(Weight{0, 0, 0}) == 1);
    CHECK(atypicality(Weight{0, 0, 0, 0}) == 2);
    CHECK(atypicality(Weight{1, 2}) == 0);
    CHECK(atypicality(Weight{s, -s, s + q(1), -s - q(1)}) == 2);
  }

  TEST_CASE("atypicality matches exhaustive matching") {
    auto g = rng(21);
    const std::vector<Scalar> pool{q(0), q(1), q(-1), q(2), q(-2), q(1, 2), q(-1, 2), pi, -pi};
    for (int t = 0; t < 400; ++t) {
      const Weight w = oracle::random_weight(g, static_cast<int>(oracle::uniform(g, 1, 6)), pool);
      CHECK(atypicality(w) == oracle::atypicality_brute(w));
    }
  }

  TEST_CASE("central characters") {
    const Weight a{1, -1, 3};
    const Weight b{3, 5, -5};
    CHECK(same_central_char(a, b));
    const auto witness = oracle::central_witness_search(a, b);
    REQUIRE(witness.has_value());
    CHECK(witness_is_valid(a, b, *witness));
    CHECK_FALSE(same_central_char(Weight{1, 0}, Weight{2, 0}));
    CHECK_FALSE(oracle::central_witness_search(Weight{1, 0}, Weight{2, 0}).has_value());
    CHECK(same_central_char(b, b));
    CHECK(central_core(Weight{0, 0, 0, 2, -2, 2}) == std::vector<Scalar>{q(0), q(2)});
  }

  TEST_CASE("central character agrees with witness search on a small grid") {
    std::vector<Weight> grid;
    for (long x = -3; x <= 3; ++x) {
      grid.push_back(Weight{x});
      for (long y = -3; y <= 3; ++y) grid.push_back(Weight{x, y});
    }
    for (const auto& a : grid) {
      for (const auto& b : grid) {
        if (a.n() != b.n()) continue;
        CHECK(same_central_char(a, b) == oracle::central_witness_search(a, b).has_value());
      }
    }
  }

  TEST_CASE("the relation ~") {
    CHECK(linked_sim(Weight{1, -1}, Weight{2, -2}));
    CHECK(linked_sim(Weight{1, -1, 3}, Weight{3, 5, -5}));
    CHECK_FALSE(linked_sim(Weight{s, -s}, Weight{s + q(1, 2), -s - q(1, 2)}));
    CHECK_THROWS_AS(linked_sim(Weight{1, 0}, Weight{0, 1, 0}), DomainError);
  }

  TEST_CASE("approximate linkage witnesses") {
    const Weight a{s, -s};
    const Weight b{s + q(1), -s - q(1)};
    const auto w = linked_approx(a, b);
    REQUIRE(w.has_value());
    CHECK(w->w == Permutation{1, 2});
    REQUIRE(w->pairs.size() == 1);
    CHECK(w->pairs[0].alpha == Root{1, 2});
    CHECK(w->pairs[0].k == q(-1));
    CHECK(witness_is_valid(a, b, *w));

    const auto self = linked_approx(a, a);
    REQUIRE(self.has_value());
    CHECK(self->w == Permutation{1, 2});
    CHECK(self->pairs.empty());

    const auto swap = linked_approx(Weight{1, 2}, Weight{2, 1});
    REQUIRE(swap.has_value());
    CHECK(swap->w == Permutation{2, 1});
    CHECK(swap->pairs.empty());

    CHECK_FALSE(linked_approx(Weight{s, q(1)}, Weight{q(1), s}).has_value());
  }

  TEST_CASE("witness JSON round trip") {
    const auto w = linked_approx(Weight{s, -s, q(2), q(1)}, Weight{s + q(3), -s - q(3), q(1), q(2)});
    REQUIRE(w.has_value());
    const Json j = witness_to_json(*w);
    CHECK(witness_from_json(Json::parse(j.dump())) == *w);
    CHECK_THROWS_AS(witness_from_json(Json::parse("{\"w\": [1]}")), ParseError);
  }

  TEST_CASE("wt labels") {
    CHECK(wt(Weight{pi + q(1), pi, -pi}, pi, 2).str() == "e(1)");
    CHECK(wt(Weight{s, -s}, s, 1).is_zero());
    WtVector expected;
    expected.add(1, 1);
    expected.add(0, -1);
    CHECK(wt(Weight{s + q(1), -s}, s, 1) == expected);
    CHECK_THROWS_AS(wt(Weight{s, s}, s, 1), DomainError);
  }

  TEST_CASE("linkage properties on Lambda_{s^ell}(n)") {
    auto g = rng(31);
    for (int t = 0; t < 300; ++t) {
      const int n = static_cast<int>(oracle::uniform(g, 1, 4));
      const int ell = static_cast<int>(oracle::uniform(g, 0, n));
      const Weight a = oracle::random_in_lambda(g, n, ell, 2, s);
      const Weight b = oracle::random_in_lambda(g, n, ell, 2, s);
      const bool sim = linked_sim(a, b);
      CHECK(sim == (wt(a, s, ell) == wt(b, s, ell)));
      const auto approx = linked_approx(a, b);
      CHECK(approx.has_value() == sim);
      if (approx) CHECK(witness_is_valid(a, b, *approx));
      CHECK(linked_approx_serial(a, b) == approx);
    }
  }

  TEST_CASE("approx implies sim on mixed weights") {
    auto g = rng(41);
    const std::vector<Scalar> pool{q(0), q(1), q(-1), q(1, 2), q(-1, 2), pi, -pi, pi + q(1)};
    for (int t = 0; t < 300; ++t) {
      const int n = static_cast<int>(oracle::uniform(g, 1, 4));
      const Weight a = oracle::random_weight(g, n, pool);
      const Weight b = oracle::random_weight(g, n, pool);
      const auto w = linked_approx(a, b);
      if (w) {
        CHECK(linked_sim(a, b));
        CHECK(witness_is_valid(a, b, *w));
      }
    }
  }

  TEST_CASE("permutation ranks") {
    CHECK(factorial(4) == 24);
    CHECK(unrank_permutation(0, 3) == Permutation{1, 2, 3});
    CHECK(unrank_permutation(5, 3) == Permutation{3, 2, 1});
  }
}
