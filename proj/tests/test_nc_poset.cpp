#include <doctest.h>

#include "ncposet/enumerate.hpp"
#include "ncposet/nc_poset.hpp"
#include "oracles.hpp"

using namespace ncposet;

TEST_SUITE("nc_leq") {
  TEST_CASE("examples, fast and oracle") {
    for (auto leq : {&nc_leq, &nc_leq_oracle}) {
      CHECK(leq(Word{1, 1}, Word{1, 2}, 2));
      CHECK_FALSE(leq(Word{1, 2}, Word{2, 1}, 2));
      CHECK_FALSE(leq(Word{2, 1}, Word{1, 2}, 2));
      CHECK_FALSE(leq(Word{1, 1}, Word{2}, 2));
      CHECK_FALSE(leq(Word{2}, Word{1, 1}, 2));
      CHECK(leq(Word{2, 1, 3}, Word{2, 1, 3}, std::nullopt));
      CHECK(leq(Word{2}, Word{3, 1}, std::nullopt));
      CHECK(leq(Word{}, Word{4, 4}, std::nullopt));
    }
  }

  TEST_CASE("bounded operands are checked") {
    CHECK_THROWS_AS(nc_leq(Word{3}, Word{1}, 2), DomainError);
  }

  TEST_CASE("oracle equivalence, n = 3 degree <= 4 and n = 2 degree <= 5") {
    for (auto [n, d] : {std::pair<Letter, std::size_t>{3, 4}, {2, 5}}) {
      const auto words = words_up_to_degree(n, d);
      std::size_t mismatches = 0;
      for (const auto& a : words) {
        for (const auto& b : words) {
          if (nc_leq(a, b, n) != nc_leq_oracle(a, b, n)) ++mismatches;
        }
      }
      CHECK(mismatches == 0);
    }
  }

  TEST_CASE("N_n is the restriction of N") {
    const auto words = words_up_to_degree(3, 4);
    for (const auto& a : words) {
      for (const auto& b : words) {
        CHECK(nc_leq(a, b, 3) == nc_leq(a, b));
      }
    }
  }

  TEST_CASE("partial order axioms and finite down-sets") {
    const auto words = words_up_to_degree(3, 3);
    for (const auto& a : words) {
      CHECK(nc_leq(a, a));
      for (const auto& b : words) {
        if (a != b && nc_leq(a, b)) CHECK_FALSE(nc_leq(b, a));
        if (!nc_leq(a, b)) continue;
        for (const auto& c : words) {
          if (nc_leq(b, c)) CHECK(nc_leq(a, c));
        }
      }
      // Everything below a has rank <= rank(a), a finite set.
      for (const auto& u : words_up_to_rank(std::nullopt, rank(a) + 2)) {
        if (nc_leq(u, a)) CHECK(rank(u) <= rank(a));
      }
    }
  }

  TEST_CASE("degree fibers are componentwise orders") {
    for (std::size_t d = 0; d <= 4; ++d) {
      const auto words = oracle::words_of_degree(3, d);
      for (const auto& a : words) {
        for (const auto& b : words) {
          bool componentwise = true;
          for (std::size_t t = 0; t < d; ++t) componentwise &= a[t] <= b[t];
          CHECK(nc_leq(a, b, 3) == componentwise);
        }
      }
    }
  }
}

TEST_SUITE("covers") {
  TEST_CASE("upper cover examples") {
    CHECK(covers_up(Word{1}) == std::vector<Word>{{1, 1}, {2}});
    CHECK(covers_up(Word{2}) == std::vector<Word>{{1, 2}, {2, 1}, {3}});
    CHECK(covers_up(Word{2}, 2) == std::vector<Word>{{1, 2}, {2, 1}});
    // x3 has degree 1 and so is not above x1^2.
    CHECK(covers_up(Word{1, 1}) == std::vector<Word>{{1, 1, 1}, {1, 2}, {2, 1}});
    CHECK(covers_up(Word{}) == std::vector<Word>{{1}});
  }

  TEST_CASE("lower cover examples") {
    CHECK(covers_down(Word{2, 1, 1}) == std::vector<Word>{{1, 1, 1}, {2, 1}});
    CHECK(covers_down(Word{1, 1, 1}) == std::vector<Word>{{1, 1}});
    CHECK(covers_down(Word{}).empty());
  }

  TEST_CASE("covers agree with the definition and with the closed forms") {
    for (auto n : {Bound{}, Bound{2}, Bound{3}}) {
      for (const auto& m : words_up_to_rank(n, 6)) {
        const auto up = covers_up(m, n);
        CHECK(up == oracle::covers_up_by_search(m, n));
        CHECK(up.size() == oracle::upper_cover_count(m, n));
        const auto down = covers_down(m);
        CHECK(down == oracle::covers_down_by_search(m));
        CHECK(down.size() == oracle::lower_cover_count(m));
      }
    }
  }

  TEST_CASE("every cover raises one multirank component by one") {
    for (const auto& m : words_up_to_rank(std::nullopt, 7)) {
      const auto before = multirank(m);
      for (const auto& c : covers_up(m)) {
        const auto after = multirank(c);
        std::uint64_t total = 0;
        for (std::size_t j = 0; j < after.length(); ++j) {
          REQUIRE(after.part(j) >= before.part(j));
          total += after.part(j) - before.part(j);
        }
        CHECK(total == 1);
      }
    }
  }
}

TEST_CASE("lattice walks") {
  using P = LatticePoint;
  CHECK(walk(Word{2, 1, 1, 2, 2}) ==
        std::vector<P>{{0, 0}, {1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 3}});
  CHECK(walk(Word{}) == std::vector<P>{{0}});
  CHECK(walk(Word{1, 1, 2}) == std::vector<P>{{0, 0}, {1, 0}, {2, 0}, {3, 1}});
  CHECK(format_point(P{5, 3}) == "(5,3)");
  for (const auto& m : words_up_to_rank(std::nullopt, 6)) {
    const auto end = walk(m).back();
    const auto phi = multirank(m);
    for (std::size_t j = 0; j < end.size(); ++j) CHECK(end[j] == phi.part(j));
  }
}
