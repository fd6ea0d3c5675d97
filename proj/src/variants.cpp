#include "ncposet/variants.hpp"

#include "rule_search.hpp"

namespace ncposet {

bool q_leq(const Word& m, const Word& m2, Bound n) {
  m.check_bound(n);
  m2.check_bound(n);
  // Padding and raising grow the multirank; swaps keep it, and each swap
  // removes an inversion, so the swap orbit inside a multirank is finite.
  return detail::reachable(m, m2, [n](const Word& w, auto&& emit) {
    detail::nc_successors(w, n, emit);
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      if (w[j] <= w[j + 1]) continue;
      std::vector<Letter> swapped(w.letters().begin(), w.letters().end());
      std::swap(swapped[j], swapped[j + 1]);
      emit(Word(std::move(swapped)));
    }
  });
}

bool p_leq(const Word& m, const Word& m2) {
  if (m.size() != m2.size()) return m.size() < m2.size();
  for (std::size_t t = 0; t < m.size(); ++t) {
    if (m[t] > m2[t]) return false;
  }
  return true;
}

bool QOrder::leq(const Word& m, const Word& m2) const {
  auto key = std::make_pair(m, m2);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const bool result = q_leq(m, m2, bound_);
  std::lock_guard lock(mutex_);
  cache_.emplace(std::move(key), result);
  return result;
}

}  // namespace ncposet
