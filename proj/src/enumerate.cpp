#include "ncposet/enumerate.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <string>

namespace ncposet {

namespace {

void check_limit(std::size_t count, std::size_t limit, const char* what) {
  if (count > limit) {
    throw ResourceError(std::string(what) + " exceeds the limit of " +
                        std::to_string(limit) + " elements");
  }
}

Letter effective_alphabet(Bound n, std::uint64_t max_rank) {
  const auto cap = static_cast<Letter>(std::min<std::uint64_t>(max_rank, UINT32_MAX));
  return n ? std::min(*n, cap) : cap;
}

}  // namespace

std::vector<Word> words_up_to_rank(Bound n, std::uint64_t max_rank,
                                   std::size_t limit) {
  const Letter alphabet = effective_alphabet(n, max_rank);
  std::vector<Word> out;
  std::vector<Letter> prefix;
  // Depth-first over compositions of ranks <= max_rank with parts <= alphabet.
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t remaining) {
    out.emplace_back(prefix);
    check_limit(out.size(), limit, "word enumeration");
    for (Letter i = 1; i <= alphabet && i <= remaining; ++i) {
      prefix.push_back(i);
      extend(remaining - i);
      prefix.pop_back();
    }
  };
  extend(max_rank);
  sort_canonical(out);
  return out;
}

std::vector<Word> words_up_to_degree(Letter n, std::size_t max_degree,
                                     std::size_t limit) {
  std::vector<Word> out;
  std::vector<Letter> prefix;
  std::function<void()> extend = [&]() {
    out.emplace_back(prefix);
    check_limit(out.size(), limit, "word enumeration");
    if (prefix.size() == max_degree) return;
    for (Letter i = 1; i <= n; ++i) {
      prefix.push_back(i);
      extend();
      prefix.pop_back();
    }
  };
  extend();
  sort_canonical(out);
  return out;
}

std::vector<CommMonomial> monomials_up_to_rank(Bound n, std::uint64_t max_rank,
                                               std::size_t limit) {
  const Letter alphabet = effective_alphabet(n, max_rank);
  std::vector<CommMonomial> out;
  std::map<Letter, std::uint32_t> exps;
  // Choose exponents letter by letter from the largest letter down.
  std::function<void(Letter, std::uint64_t)> extend = [&](Letter letter,
                                                          std::uint64_t remaining) {
    if (letter == 0) {
      out.emplace_back(exps);
      check_limit(out.size(), limit, "monomial enumeration");
      return;
    }
    for (std::uint32_t e = 0; std::uint64_t{e} * letter <= remaining; ++e) {
      if (e) exps[letter] = e;
      extend(letter - 1, remaining - std::uint64_t{e} * letter);
    }
    exps.erase(letter);
  };
  extend(alphabet, max_rank);
  sort_canonical(out);
  return out;
}

}  // namespace ncposet
