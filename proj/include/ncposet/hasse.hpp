#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncposet/errors.hpp"
#include "ncposet/poset.hpp"

namespace ncposet {

struct HasseVertex {
  std::string label;  // canonical word or monomial text
  std::uint64_t rank = 0;
  MultiRank multirank;

  friend bool operator==(const HasseVertex&, const HasseVertex&) = default;
};

/// Cover graph of the sub-poset induced on all elements of rank <= max_rank.
/// Vertices are in canonical order (rank, then text); edges are
/// (lower, upper) index pairs sorted lexicographically.
struct HasseGraph {
  PosetHandle handle;
  std::uint64_t max_rank = 0;
  std::vector<HasseVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Number of vertices at each rank 0..max_rank.
  std::vector<std::size_t> level_sizes() const;
};

/// Dense families (Q, P, COMM) need a vertex-by-vertex relation table and are
/// capped separately.
inline constexpr std::size_t kDenseVertexLimit = 40'000;

HasseGraph hasse(const PosetHandle& h, std::uint64_t max_rank,
                 std::size_t limit = kDefaultLimit);

nlohmann::json to_json(const HasseGraph& g);
HasseGraph hasse_from_json(const nlohmann::json& j);
std::string to_dot(const HasseGraph& g);

}  // namespace ncposet
