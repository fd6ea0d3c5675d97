#pragma once

#include <deque>
#include <set>

#include "ncposet/word.hpp"

namespace ncposet::detail {

/// True when every component of a is at most the same component of b.
inline bool dominated(const MultiRank& a, const MultiRank& b) {
  return a.contained_in(b);
}

/// Breadth-first reachability from start to target. `successors(w, emit)`
/// calls emit for every one-rule successor of w. States whose multirank is
/// not dominated by the target's are discarded: every rule either raises some
/// multirank component or keeps the multirank fixed, so such states can never
/// lead back to the target. The dominated region is finite (degree at most
/// the first component, letters at most the length), so the search ends.
template <class Successors>
bool reachable(const Word& start, const Word& target, Successors successors) {
  if (start == target) return true;
  const auto goal = multirank(target);
  if (!dominated(multirank(start), goal)) return false;
  std::set<Word> seen{start};
  std::deque<Word> frontier{start};
  while (!frontier.empty()) {
    const Word w = std::move(frontier.front());
    frontier.pop_front();
    bool found = false;
    successors(w, [&](Word next) {
      if (found || seen.contains(next)) return;
      if (next == target) {
        found = true;
        return;
      }
      if (!dominated(multirank(next), goal)) return;
      seen.insert(next);
      frontier.push_back(std::move(next));
    });
    if (found) return true;
  }
  return false;
}

/// Successors under t -> x1 t, t -> t x1 and every defined raising.
template <class Emit>
void nc_successors(const Word& w, Bound n, Emit&& emit) {
  emit(Word{1}.concat(w));
  emit(w.concat(Word{1}));
  for (std::size_t j = 1; j <= w.size(); ++j) {
    if (n && w[j - 1] >= *n) continue;
    emit(raise(w, j));
  }
}

}  // namespace ncposet::detail
