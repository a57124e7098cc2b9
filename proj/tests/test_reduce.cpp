#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "qblocks/errors.hpp"
#include "qblocks/reduce.hpp"

using namespace qt;

TEST_SUITE("reduce") {
  TEST_CASE("the seven-coordinate example") {
    const Weight w{q(1, 5), q(1), -pi, q(3, 2), pi, q(-3, 2), -pi};
    const auto r = normalize_block(w);
    std::vector<int> sizes;
    for (const auto& f : r.levi) sizes.push_back(f.size);
    CHECK(sizes == std::vector<int>{1, 2, 1, 3});
    CHECK(r.levi[0].cls.kind == CosetKind::Int);
    CHECK(r.levi[1].cls.kind == CosetKind::Half);
    CHECK(r.levi[1].ell == 1);
    CHECK(r.levi[2].cls == coset_class(q(1, 5)));
    CHECK(r.levi[3].cls == coset_class(pi));
    CHECK(r.levi[3].ell == 1);
    CHECK(r.reduced == Weight{q(1), q(3, 2), q(-3, 2), q(1, 5), pi - q(1), q(1) - pi, -pi});
    const auto atypical = std::count_if(r.moves.begin(), r.moves.end(),
                                        [](const Move& m) { return m.kind == MoveKind::Atypical; });
    CHECK(atypical == 1);
    CHECK(replay_moves(w, r.moves) == r.reduced);
    CHECK(r.parity_undetermined);
    const bool singleton_note = std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& n) {
      return n.find("singleton class") != std::string::npos && n.find("1/5") != std::string::npos;
    });
    CHECK(singleton_note);
  }

  TEST_CASE("already normal and two-coordinate cases") {
    const auto a = normalize_block(Weight{pi, -pi});
    REQUIRE(a.levi.size() == 1);
    CHECK(a.levi[0].size == 2);
    CHECK(a.levi[0].ell == 1);
    CHECK(a.reduced == Weight{pi, -pi});
    CHECK(a.moves.empty());

    const auto b = normalize_block(Weight{-pi, pi});
    CHECK(b.reduced == Weight{pi - q(1), q(1) - pi});
    REQUIRE(b.moves.size() == 1);
    CHECK(b.moves[0] == Move{{1, 2}, MoveKind::Atypical});
  }

  TEST_CASE("replay") {
    const Weight w{-pi, pi};
    CHECK(replay_moves(w, {}) == w);
    CHECK(replay_moves(w, {{{1, 2}, MoveKind::Atypical}}) == Weight{pi - q(1), q(1) - pi});
    CHECK_THROWS_AS(replay_moves(w, {{{1, 2}, MoveKind::Typical}}), DomainError);
    CHECK_THROWS_AS(replay_moves(Weight{1, 2}, {{{1, 2}, MoveKind::Typical}}), DomainError);
    CHECK_THROWS_AS(replay_moves(w, {{{1, 3}, MoveKind::Typical}}), DomainError);
  }

  TEST_CASE("integer Levi factor has full ell") {
    const auto r = normalize_block(Weight{3, -1, 0});
    REQUIRE(r.levi.size() == 1);
    CHECK(r.levi[0].ell == 3);
    CHECK(r.moves.empty());
  }

  TEST_CASE("properties on random weights") {
    auto g = rng(7);
    const std::vector<Scalar> pool{q(0),    q(1),      q(-1),        q(1, 2),     q(-3, 2), pi,         -pi,
                                   pi + 1,  q(1) - pi, s,            -s,          s - q(2), q(1, 5),    q(-4, 5)};
    for (int t = 0; t < 400; ++t) {
      const int n = static_cast<int>(oracle::uniform(g, 1, 7));
      const Weight w = oracle::random_weight(g, n, pool);
      const auto r = normalize_block(w);
      CHECK(replay_moves(w, r.moves) == r.reduced);
      const auto again = normalize_block(r.reduced);
      CHECK(again.moves.empty());
      CHECK(again.levi == r.levi);
      int total = 0;
      for (const auto& f : r.levi) total += f.size;
      CHECK(total == n);
      for (std::size_t x = 0; x < r.levi.size(); ++x) {
        for (std::size_t y = x + 1; y < r.levi.size(); ++y) {
          CHECK_FALSE(r.levi[x].cls == r.levi[y].cls);
          CHECK_FALSE(r.levi[x].cls == r.levi[y].cls.paired());
        }
      }
      // Combinatorial shadow of each move.
      Weight cur = w;
      for (const auto& m : r.moves) {
        const auto k = static_cast<std::size_t>(m.alpha.i - 1);
        CHECK_FALSE(pairing(cur, m.alpha).is_integer());
        const auto [next, kind] = star_action(m.alpha, cur);
        if (kind == MoveKind::Typical) {
          CHECK(next[k] == cur[k + 1]);
          CHECK(next[k + 1] == cur[k]);
        } else {
          CHECK(bar_pairing(next, m.alpha).is_zero());
        }
        cur = next;
      }
      // Each factor's block lies in Lambda_{s^ell}.
      std::size_t offset = 0;
      for (const auto& f : r.levi) {
        std::vector<Scalar> part(r.reduced.coords().begin() + static_cast<long>(offset),
                                 r.reduced.coords().begin() + static_cast<long>(offset) + f.size);
        const Scalar rep = f.cls.kind == CosetKind::Int ? q(0) : f.cls.representative;
        CHECK(is_in_lambda(Weight(part), rep, f.ell));
        offset += static_cast<std::size_t>(f.size);
      }
    }
  }
}
