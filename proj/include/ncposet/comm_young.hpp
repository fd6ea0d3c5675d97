#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncposet/word.hpp"

namespace ncposet {

/// G o log: part j is the number of letters of index >= j (counted with
/// multiplicity).
Partition to_partition(const CommMonomial& t);

/// Inverse of to_partition: exponent of x_i is part_i - part_{i+1}.
CommMonomial from_partition(const Partition& p);

/// t <= t2 in the commutative poset: Young diagram containment.
bool comm_leq(const CommMonomial& t, const CommMonomial& t2,
              Bound n = std::nullopt);

/// Reference search over the generating rules: multiply by x1, or replace
/// one x_i by x_{i+1}.
bool comm_leq_oracle(const CommMonomial& t, const CommMonomial& t2);

/// One law of the (sigma, sigma+) coconnection between (X_n*, Q_n) and the
/// commutative poset.
struct LawResult {
  std::string law;
  std::uint64_t checked = 0;
  /// First counterexample found, in canonical order, if any.
  std::optional<std::string> witness;

  bool holds() const noexcept { return !witness; }
};

struct CoconnectionReport {
  Letter n = 0;
  std::uint64_t max_rank = 0;
  std::vector<LawResult> laws;

  std::size_t violations() const noexcept;
};

/// Exhaustively checks, over all words and monomials of rank <= max_rank:
///   sigma is order preserving from Q_n to the commutative poset,
///   sigma+ is order preserving back,
///   sigma+ sigma(m) >= m in Q_n,
///   sigma sigma+(w) <= w (it is in fact equal).
CoconnectionReport check_coconnection(Letter n, std::uint64_t max_rank);

}  // namespace ncposet
