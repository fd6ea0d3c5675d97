#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "ncposet/word.hpp"

namespace ncposet {

/// m <= m2 in the sorted-order poset Q (or Q_n): reachable by x1-padding,
/// raising, and swapping an adjacent descent x_j x_i (i < j) into x_i x_j.
bool q_leq(const Word& m, const Word& m2, Bound n = std::nullopt);

/// m <= m2 in the degree-compatible poset P: lower degree, or equal degree
/// and letterwise <=.
bool p_leq(const Word& m, const Word& m2);

/// Memoizing front end for q_leq. Safe to share between threads; the cache
/// never changes an answer.
class QOrder {
 public:
  explicit QOrder(Bound n = std::nullopt) : bound_(n) {}

  bool leq(const Word& m, const Word& m2) const;
  Bound bound() const noexcept { return bound_; }

 private:
  Bound bound_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Word, Word>, bool> cache_;
};

}  // namespace ncposet
