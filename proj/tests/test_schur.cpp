#include <doctest.h>

#include "helpers.hpp"
#include "qblocks/errors.hpp"
#include "qblocks/schur.hpp"

using namespace qt;

namespace {

LaurentPoly x(int m, int i) { return LaurentPoly::variable(m, i); }

LaurentPoly e1(int m) {
  LaurentPoly out(m);
  for (int i = 0; i < m; ++i) out += x(m, i);
  return out;
}

void partitions(long size, long cap, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (size == 0) {
    out.push_back(cur);
    return;
  }
  for (long p = std::min(size, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions(size - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<long>> partitions_up_to(long max_size) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  for (long k = 0; k <= max_size; ++k) partitions(k, k, cur, out);
  return out;
}

}  // namespace

TEST_SUITE("schur") {
  TEST_CASE("small Schur polynomials") {
    CHECK(schur_jt({1}, 2) == x(2, 0) + x(2, 1));
    CHECK(schur_jt({2, 1}, 2) == x(2, 0) * x(2, 0) * x(2, 1) + x(2, 0) * x(2, 1) * x(2, 1));
    CHECK(schur_jt({1, 1, 1}, 2).is_zero());
    CHECK(oracle::schur_tableaux({2}, 2) == x(2, 0) * x(2, 0) + x(2, 0) * x(2, 1) + x(2, 1) * x(2, 1));
    CHECK(oracle::schur_tableaux({1}, 3) == e1(3));
    CHECK(oracle::schur_tableaux({2, 2}, 2) == x(2, 0) * x(2, 0) * x(2, 1) * x(2, 1));
  }

  TEST_CASE("Jacobi-Trudi agrees with tableaux") {
    for (const auto& shape : partitions_up_to(6)) {
      for (int m = 1; m <= 4; ++m) {
        CAPTURE(m);
        CHECK(schur_jt(shape, m) == oracle::schur_tableaux(shape, m));
      }
    }
  }

  TEST_CASE("Pieri expansion") {
    const auto one = *PartitionIndex::make({1}, 2);
    const auto a = pieri_expand(one);
    REQUIRE(a.size() == 2);
    CHECK(a[0].parts == std::vector<long>{2, 0});
    CHECK(a[1].parts == std::vector<long>{1, 1});
    const auto b = pieri_expand(*PartitionIndex::make({2, 2}, 2));
    REQUIRE(b.size() == 1);
    CHECK(b[0].parts == std::vector<long>{3, 2});
    const auto c = pieri_expand(*PartitionIndex::make({0}, 1));
    REQUIRE(c.size() == 1);
    CHECK(c[0].parts == std::vector<long>{1});

    for (const auto& shape : partitions_up_to(5)) {
      for (int m = 1; m <= 4; ++m) {
        const auto idx = PartitionIndex::make(shape, m);
        if (!idx) continue;
        LaurentPoly sum(m);
        for (const auto& nu : pieri_expand(*idx)) sum += schur_jt(nu);
        CHECK(schur_jt(*idx) * e1(m) == sum);
      }
    }
  }

  TEST_CASE("monomial twist") {
    for (const auto& shape : partitions_up_to(4)) {
      for (int m = 1; m <= 3; ++m) {
        const auto idx = PartitionIndex::make(shape, m);
        if (!idx) continue;
        for (long c : {-2L, 1L, 3L}) {
          std::vector<long> shifted = idx->parts;
          for (auto& p : shifted) p += c;
          const auto moved = PartitionIndex::make(shifted, m);
          REQUIRE(moved.has_value());
          CHECK(moved->twist() == idx->twist() + c);
          CHECK(schur_jt(*moved) == schur_jt(*idx).shifted(Exponent(static_cast<std::size_t>(m), c)));
        }
      }
    }
    CHECK_THROWS_AS(PartitionIndex::make({1, 2}, 2), DomainError);
  }

  TEST_CASE("straightening") {
    const auto a = straighten({1, 2});
    REQUIRE(a.has_value());
    CHECK(a->sign == -1);
    CHECK(a->alternant == std::vector<long>{2, 1});
    CHECK(a->index.parts == std::vector<long>{1, 1});
    CHECK_FALSE(straighten({2, 2}).has_value());
    const auto c = straighten({4, 2, 0});
    REQUIRE(c.has_value());
    CHECK(c->sign == 1);
    CHECK(c->alternant == std::vector<long>{4, 2, 0});
    CHECK(c->index.parts == std::vector<long>{2, 1, 0});
    // a_raw = sign * s_index * a_rho
    for (const std::vector<long>& raw : {std::vector<long>{0, 3, 1}, std::vector<long>{5, -1, 2}, std::vector<long>{1, 2}}) {
      const auto st = straighten(raw);
      REQUIRE(st.has_value());
      const int m = static_cast<int>(raw.size());
      CHECK(alternant(raw) == (schur_jt(st->index) * alternant(rho_vector(m))).scaled(st->sign));
    }
  }
}
