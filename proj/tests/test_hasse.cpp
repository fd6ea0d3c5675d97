#include <doctest.h>

#include <set>

#include "ncposet/hasse.hpp"
#include "ncposet/nc_poset.hpp"
#include "ncposet/series.hpp"

using namespace ncposet;

namespace {

/// Covers recomputed pairwise from the poset relation.
std::vector<std::pair<std::size_t, std::size_t>> brute_covers(const HasseGraph& g) {
  std::vector<Element> elems;
  for (const auto& v : g.vertices) elems.push_back(parse_element(g.handle, v.label));
  const std::size_t n = elems.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) lt[u][v] = u != v && leq(g.handle, elems[u], elems[v]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!lt[u][v]) continue;
      bool between = false;
      for (std::size_t w = 0; w < n && !between; ++w) between = lt[u][w] && lt[w][v];
      if (!between) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("N_2 up to rank 4") {
  const auto g = hasse({Family::NC, 2}, 4);
  CHECK(g.vertices.size() == 12);
  CHECK(g.level_sizes() == std::vector<std::size_t>{1, 1, 2, 3, 5});
  CHECK(g.edges.size() == 18);
  std::size_t cover_total = 0;
  for (const auto& v : g.vertices) {
    if (v.rank < 4) cover_total += covers_up(parse_word(v.label), 2).size();
  }
  CHECK(cover_total == 18);
}

TEST_CASE("N up to rank 3") {
  const auto g = hasse({Family::NC, std::nullopt}, 3);
  CHECK(g.level_sizes() == std::vector<std::size_t>{1, 1, 2, 4});
  std::set<std::string> top;
  for (const auto& v : g.vertices) {
    if (v.rank == 3) top.insert(v.label);
  }
  CHECK(top == std::set<std::string>{"x1*x1*x1", "x1*x2", "x2*x1", "x3"});
}

TEST_CASE("vertex order is rank then text") {
  const auto g = hasse({Family::NC, std::nullopt}, 5);
  for (std::size_t i = 1; i < g.vertices.size(); ++i) {
    const auto& a = g.vertices[i - 1];
    const auto& b = g.vertices[i];
    CHECK((a.rank < b.rank || (a.rank == b.rank && a.label < b.label)));
  }
}

TEST_CASE("edges are exactly the covers of the induced sub-poset") {
  for (const auto& [h, r] : std::vector<std::pair<PosetHandle, std::uint64_t>>{
           {{Family::NC, 2}, 6},
           {{Family::NC, std::nullopt}, 5},
           {{Family::Q, 2}, 6},
           {{Family::Q, 3}, 5},
           {{Family::P, 2}, 5},
           {{Family::P, std::nullopt}, 5},
           {{Family::COMM, 2}, 7},
           {{Family::COMM, std::nullopt}, 6}}) {
    CAPTURE(to_string(h.family));
    CAPTURE(r);
    const auto g = hasse(h, r);
    CHECK(g.edges == brute_covers(g));
  }
}

TEST_CASE("multirank steps along cover edges") {
  for (const auto& g : {hasse({Family::NC, 2}, 7), hasse({Family::NC, std::nullopt}, 6)}) {
    for (const auto& [lo, hi] : g.edges) {
      const auto& a = g.vertices[lo].multirank;
      const auto& b = g.vertices[hi].multirank;
      std::size_t bumped = 0;
      for (std::size_t j = 0; j < b.length(); ++j) {
        REQUIRE(b.part(j) >= a.part(j));
        bumped += b.part(j) - a.part(j);
      }
      CHECK(bumped == 1);
    }
  }
}

TEST_CASE("level sizes follow the rank generating function") {
  for (Bound n : {Bound{}, Bound{1}, Bound{2}, Bound{3}}) {
    const auto g = hasse({Family::NC, n}, 9);
    const auto table = rank_coefficients(n, 9);
    const auto levels = g.level_sizes();
    for (std::size_t k = 0; k < levels.size(); ++k) CHECK(levels[k] == table.coefficients[k]);
  }
}

TEST_CASE("Q_2 and COMM_2 share ranks; Q refines sigma fibers") {
  const auto q = hasse({Family::Q, 2}, 5);
  const auto c = hasse({Family::COMM, 2}, 5);
  CHECK(c.vertices.size() < q.vertices.size());
  // x2 x1 < x1 x2 is a cover inside one fiber.
  std::size_t a = 0, b = 0;
  for (std::size_t i = 0; i < q.vertices.size(); ++i) {
    if (q.vertices[i].label == "x2*x1") a = i;
    if (q.vertices[i].label == "x1*x2") b = i;
  }
  CHECK(std::ranges::find(q.edges, std::pair{a, b}) != q.edges.end());
}

TEST_CASE("serialization") {
  const auto g = hasse({Family::NC, 2}, 4);
  const auto j = to_json(g);
  CHECK(j.at("poset") == "nc");
  CHECK(j.at("n") == 2);
  CHECK(j.at("max_rank") == 4);
  CHECK(j.at("vertices").size() == 12);
  CHECK(j.at("vertices").at(0).at("word") == "1");
  CHECK(j.at("edges").at(0) == nlohmann::json::array({0, 1}));
  const auto back = hasse_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.vertices == g.vertices);
  CHECK(back.edges == g.edges);
  CHECK(back.handle.n == g.handle.n);
  CHECK(to_json(hasse({Family::COMM, std::nullopt}, 2)).at("n").is_null());

  const auto dot = to_dot(g);
  CHECK(dot.find("subgraph rank_4") != std::string::npos);
  CHECK(dot.find("v0 -> v1;") != std::string::npos);
  CHECK(dot.find("label=\"x1*x2\"") != std::string::npos);
}

TEST_CASE("vertex cap") {
  CHECK_THROWS_AS(hasse({Family::NC, std::nullopt}, 20, 1000), ResourceError);
  CHECK_NOTHROW(hasse({Family::NC, std::nullopt}, 9, 1000));  // 512 vertices
}
