#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncposet/poset.hpp"
#include "ncposet/word.hpp"

namespace ncposet {

enum class OrderKind {
  DegLeftLex,   ///< degree, then letters left to right
  DegRightLex,  ///< degree, then letters right to left
  WeightDeg,    ///< weighted degree, then DegLeftLex
};

struct TermOrderSpec {
  OrderKind kind = OrderKind::DegLeftLex;
  /// Weight of x_i at index i-1; strictly increasing and positive.
  std::vector<std::uint64_t> weights;

  static TermOrderSpec weighted(std::vector<std::uint64_t> weights);
};

/// "deglex", "degrevlex" or "weight:w1,w2,...".
TermOrderSpec parse_order_spec(std::string_view text);
std::string to_string(const TermOrderSpec& spec);

/// Total comparison; never INCOMPARABLE. Throws DomainError when a weighted
/// order meets a letter it has no weight for.
Comparison order_compare(const TermOrderSpec& spec, const Word& m, const Word& m2);

struct OrderCheck {
  bool holds = true;
  std::optional<std::string> witness;
};

struct OrderReport {
  TermOrderSpec spec;
  Letter n = 0;
  std::size_t max_degree = 0;
  OrderCheck total;  ///< antisymmetric, transitive, EQ only on equal words
  OrderCheck one_minimal;
  OrderCheck multiplicative;  ///< s < t => a s b < a t b with deg a, deg b <= 2
  OrderCheck standard;
  OrderCheck sorted;
  OrderCheck degree_compatible;

  /// Multiplicative, standard, and a total order with 1 minimal.
  bool is_standard_term_order() const noexcept {
    return total.holds && one_minimal.holds && multiplicative.holds && standard.holds;
  }
};

inline constexpr std::size_t kMultiplierDegree = 2;

/// Exhaustive validation over all words on x1..xn of degree <= max_degree.
OrderReport validate_order(const TermOrderSpec& spec, Letter n, std::size_t max_degree);

struct Containment {
  bool contained = true;
  /// (a, b) with a < b in the poset but not in the term order.
  std::optional<std::pair<Word, Word>> witness;
};

/// Whether the order extends the poset on words of degree <= max_degree over
/// x1..xn. The handle must be NC, Q or P; its bound is replaced by n.
Containment contains_poset(const TermOrderSpec& spec, Family family, Letter n,
                           std::size_t max_degree);

}  // namespace ncposet
