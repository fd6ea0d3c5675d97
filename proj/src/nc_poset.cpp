#include "ncposet/nc_poset.hpp"

#include <algorithm>

#include "rule_search.hpp"

namespace ncposet {

bool nc_leq(const Word& m, const Word& m2, Bound n) {
  m.check_bound(n);
  m2.check_bound(n);
  // The rules pad with x1 on either side and raise letters, so m <= m2 exactly
  // when m sits letterwise below some contiguous window of m2.
  if (m.size() > m2.size()) return false;
  for (std::size_t offset = 0; offset + m.size() <= m2.size(); ++offset) {
    bool ok = true;
    for (std::size_t t = 0; t < m.size() && ok; ++t) ok = m2[offset + t] >= m[t];
    if (ok) return true;
  }
  return false;
}

bool nc_leq_oracle(const Word& m, const Word& m2, Bound n) {
  m.check_bound(n);
  m2.check_bound(n);
  return detail::reachable(m, m2, [n](const Word& w, auto&& emit) {
    detail::nc_successors(w, n, emit);
  });
}

std::vector<Word> covers_up(const Word& m, Bound n) {
  m.check_bound(n);
  std::vector<Word> out;
  detail::nc_successors(m, n, [&](Word w) { out.push_back(std::move(w)); });
  sort_canonical(out);
  return out;
}

std::vector<Word> covers_down(const Word& m) {
  std::vector<Word> out;
  const auto letters = m.letters();
  if (!m.empty() && letters.front() == 1) {
    out.emplace_back(std::vector<Letter>(letters.begin() + 1, letters.end()));
  }
  if (!m.empty() && letters.back() == 1) {
    out.emplace_back(std::vector<Letter>(letters.begin(), letters.end() - 1));
  }
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (letters[j] < 2) continue;
    std::vector<Letter> lowered(letters.begin(), letters.end());
    --lowered[j];
    out.emplace_back(std::move(lowered));
  }
  sort_canonical(out);
  return out;
}

std::vector<LatticePoint> walk(const Word& m) {
  const std::size_t dim = std::max<Letter>(m.max_letter(), 1);
  std::vector<LatticePoint> points{LatticePoint(dim, 0)};
  for (auto letter : m.letters()) {
    auto next = points.back();
    for (Letter j = 0; j < letter; ++j) ++next[j];
    points.push_back(std::move(next));
  }
  return points;
}

std::string format_point(const LatticePoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

}  // namespace ncposet
