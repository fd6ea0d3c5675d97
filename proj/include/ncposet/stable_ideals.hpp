#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ncposet/word.hpp"

namespace ncposet {

/// Minimal generators of a two-sided monomial ideal in C<x1..xn>. The
/// generators form an antichain under factor divisibility and are kept in
/// canonical order.
class IdealGens {
 public:
  IdealGens(Letter n, std::vector<Word> gens);

  Letter n() const noexcept { return n_; }
  const std::vector<Word>& gens() const noexcept { return gens_; }

  friend bool operator==(const IdealGens&, const IdealGens&) = default;

 private:
  Letter n_;
  std::vector<Word> gens_;
};

/// Drops every word that has another listed word as a factor.
IdealGens minimalize(std::vector<Word> gens, Letter n);

bool ideal_member(const Word& m, const IdealGens& ideal);

/// Generators of the smallest strongly stable ideal containing the ideal:
/// raise generator letters until nothing new appears.
IdealGens strongly_stable_closure(const IdealGens& ideal);

struct StabilityReport {
  /// Ideal members of rank <= bound are closed under upper covers of rank
  /// <= bound.
  bool window_closed = true;
  /// Every raising of every generator is a member.
  bool generators_closed = true;
  /// (member, cover outside the ideal); window witness first, else generator.
  std::optional<std::pair<Word, Word>> witness;

  bool stable() const noexcept { return window_closed; }
};

StabilityReport is_strongly_stable(const IdealGens& ideal, std::uint64_t rank_bound);

}  // namespace ncposet
