#include "ncposet/hasse.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "ncposet/comm_young.hpp"
#include "ncposet/enumerate.hpp"
#include "ncposet/nc_poset.hpp"
#include "ncposet/variants.hpp"

namespace ncposet {

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

/// Row-per-vertex bitset of a strict relation.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
  bool test(std::size_t r, std::size_t c) const {
    return (row(r)[c / 64] >> (c % 64)) & 1;
  }
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
  std::size_t words() const noexcept { return words_; }
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Covers of a strict partial order given as a full relation matrix.
Edges transitive_reduction(const BitMatrix& above) {
  Edges edges;
  std::vector<std::uint64_t> reach(above.words());
  for (std::size_t u = 0; u < above.size(); ++u) {
    std::ranges::fill(reach, 0);
    const auto* up = above.row(u);
    for (std::size_t w = 0; w < above.size(); ++w) {
      if (!above.test(u, w)) continue;
      const auto* further = above.row(w);
      for (std::size_t k = 0; k < above.words(); ++k) reach[k] |= further[k];
    }
    for (std::size_t v = 0; v < above.size(); ++v) {
      const bool direct = (up[v / 64] >> (v % 64)) & 1;
      const bool indirect = (reach[v / 64] >> (v % 64)) & 1;
      if (direct && !indirect) edges.emplace_back(u, v);
    }
  }
  return edges;
}

/// Strict up-sets from a successor DAG, processed in reverse topological order.
BitMatrix closure_of(const std::vector<std::vector<std::size_t>>& succ) {
  const std::size_t n = succ.size();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& s : succ) {
    for (auto v : s) ++indegree[v];
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto v : succ[order[i]]) {
      if (--indegree[v] == 0) order.push_back(v);
    }
  }
  BitMatrix above(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto u = *it;
    for (auto v : succ[u]) {
      above.set(u, v);
      const auto* further = above.row(v);
      auto* mine = above.row(u);
      for (std::size_t k = 0; k < above.words(); ++k) mine[k] |= further[k];
    }
  }
  return above;
}

void check_dense(std::size_t count) {
  if (count > kDenseVertexLimit) {
    throw ResourceError("hasse: " + std::to_string(count) +
                        " vertices exceed the dense relation limit of " +
                        std::to_string(kDenseVertexLimit));
  }
}

template <class T>
std::map<T, std::size_t> index_of(const std::vector<T>& items) {
  std::map<T, std::size_t> idx;
  for (std::size_t i = 0; i < items.size(); ++i) idx.emplace(items[i], i);
  return idx;
}

HasseGraph word_graph(const PosetHandle& h, std::uint64_t max_rank,
                      std::size_t limit) {
  HasseGraph g{h, max_rank, {}, {}};
  const auto words = words_up_to_rank(h.n, max_rank, limit);
  for (const auto& w : words) g.vertices.push_back({format_word(w), rank(w), multirank(w)});
  const auto idx = index_of(words);

  switch (h.family) {
    case Family::NC:
      // Rank-bounded sets are down-closed and N is ranked, so the covers of
      // the induced sub-poset are the covers of N itself.
      for (std::size_t u = 0; u < words.size(); ++u) {
        for (const auto& c : covers_up(words[u], h.n)) {
          if (auto it = idx.find(c); it != idx.end()) g.edges.emplace_back(u, it->second);
        }
      }
      break;
    case Family::Q: {
      check_dense(words.size());
      // Also down-closed; one-rule successors generate the relation.
      std::vector<std::vector<std::size_t>> succ(words.size());
      for (std::size_t u = 0; u < words.size(); ++u) {
        const auto& w = words[u];
        auto add = [&](const Word& next) {
          if (auto it = idx.find(next); it != idx.end()) succ[u].push_back(it->second);
        };
        for (const auto& c : covers_up(w, h.n)) add(c);
        for (std::size_t j = 0; j + 1 < w.size(); ++j) {
          if (w[j] <= w[j + 1]) continue;
          std::vector<Letter> swapped(w.letters().begin(), w.letters().end());
          std::swap(swapped[j], swapped[j + 1]);
          add(Word(std::move(swapped)));
        }
      }
      g.edges = transitive_reduction(closure_of(succ));
      break;
    }
    case Family::P: {
      // Not down-closed by rank (x3 < x1^2), so compare all pairs directly.
      check_dense(words.size());
      BitMatrix above(words.size());
      for (std::size_t u = 0; u < words.size(); ++u) {
        for (std::size_t v = 0; v < words.size(); ++v) {
          if (u != v && p_leq(words[u], words[v])) above.set(u, v);
        }
      }
      g.edges = transitive_reduction(above);
      break;
    }
    case Family::COMM: break;
  }
  return g;
}

HasseGraph monomial_graph(const PosetHandle& h, std::uint64_t max_rank,
                          std::size_t limit) {
  HasseGraph g{h, max_rank, {}, {}};
  const auto monos = monomials_up_to_rank(h.n, max_rank, limit);
  check_dense(monos.size());
  for (const auto& t : monos) g.vertices.push_back({format_monomial(t), rank(t), to_partition(t)});
  const auto idx = index_of(monos);
  std::vector<std::vector<std::size_t>> succ(monos.size());
  for (std::size_t u = 0; u < monos.size(); ++u) {
    const auto& t = monos[u];
    auto add = [&](const CommMonomial& next) {
      if (auto it = idx.find(next); it != idx.end()) succ[u].push_back(it->second);
    };
    add(t * CommMonomial::variable(1));
    for (const auto& [letter, e] : t.exponents()) {
      auto exps = t.exponents();
      --exps[letter];
      ++exps[letter + 1];
      add(CommMonomial(std::move(exps)));
    }
  }
  g.edges = transitive_reduction(closure_of(succ));
  return g;
}

}  // namespace

std::vector<std::size_t> HasseGraph::level_sizes() const {
  std::vector<std::size_t> sizes(max_rank + 1, 0);
  for (const auto& v : vertices) ++sizes[v.rank];
  return sizes;
}

HasseGraph hasse(const PosetHandle& h, std::uint64_t max_rank, std::size_t limit) {
  auto g = h.takes_monomials() ? monomial_graph(h, max_rank, limit)
                               : word_graph(h, max_rank, limit);
  std::ranges::sort(g.edges);
  return g;
}

nlohmann::json to_json(const HasseGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : g.vertices) {
    vertices.push_back({{"word", v.label},
                        {"rank", v.rank},
                        {"multirank", std::vector<std::uint64_t>(v.multirank.parts().begin(),
                                                                 v.multirank.parts().end())}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [lo, hi] : g.edges) edges.push_back({lo, hi});
  return {{"poset", to_string(g.handle.family)},
          {"n", g.handle.n ? nlohmann::json(*g.handle.n) : nlohmann::json(nullptr)},
          {"max_rank", g.max_rank},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

HasseGraph hasse_from_json(const nlohmann::json& j) {
  HasseGraph g;
  g.handle.family = parse_family(j.at("poset").get<std::string>());
  if (!j.at("n").is_null()) g.handle.n = j.at("n").get<Letter>();
  g.max_rank = j.at("max_rank").get<std::uint64_t>();
  for (const auto& v : j.at("vertices")) {
    g.vertices.push_back({v.at("word").get<std::string>(), v.at("rank").get<std::uint64_t>(),
                          Partition(v.at("multirank").get<std::vector<std::uint64_t>>())});
  }
  for (const auto& e : j.at("edges")) {
    g.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  }
  return g;
}

std::string to_dot(const HasseGraph& g) {
  std::ostringstream out;
  out << "digraph \"" << to_string(g.handle.family);
  if (g.handle.n) out << "_" << *g.handle.n;
  out << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::size_t i = 0;
  for (std::uint64_t r = 0; r <= g.max_rank; ++r) {
    out << "  subgraph rank_" << r << " {\n    rank=same;\n";
    for (; i < g.vertices.size() && g.vertices[i].rank == r; ++i) {
      out << "    v" << i << " [label=\"" << g.vertices[i].label << "\"];\n";
    }
    out << "  }\n";
  }
  for (const auto& [lo, hi] : g.edges) out << "  v" << lo << " -> v" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ncposet
