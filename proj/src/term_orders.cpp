#include "ncposet/term_orders.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <set>

#include "ncposet/enumerate.hpp"
#include "ncposet/errors.hpp"
#include "ncposet/nc_poset.hpp"
#include "ncposet/variants.hpp"

namespace ncposet {

namespace {

template <class T>
Comparison three_way(const T& a, const T& b) {
  if (a < b) return Comparison::LT;
  if (b < a) return Comparison::GT;
  return Comparison::EQ;
}

Comparison flip(Comparison c) {
  if (c == Comparison::LT) return Comparison::GT;
  if (c == Comparison::GT) return Comparison::LT;
  return c;
}

Comparison left_lex(const Word& m, const Word& m2) {
  if (m.size() != m2.size()) return three_way(m.size(), m2.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != m2[i]) return three_way(m[i], m2[i]);
  }
  return Comparison::EQ;
}

Comparison right_lex(const Word& m, const Word& m2) {
  if (m.size() != m2.size()) return three_way(m.size(), m2.size());
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] != m2[i]) return three_way(m[i], m2[i]);
  }
  return Comparison::EQ;
}

std::uint64_t weight(const TermOrderSpec& spec, const Word& m) {
  std::uint64_t total = 0;
  for (auto letter : m.letters()) {
    if (letter > spec.weights.size()) {
      throw DomainError("weight order has no weight for x" + std::to_string(letter));
    }
    total += spec.weights[letter - 1];
  }
  return total;
}

std::string pair_text(const Word& a, const Word& b) {
  return format_word(a) + ", " + format_word(b);
}

void fail(OrderCheck& check, std::string witness) {
  if (check.holds) {
    check.holds = false;
    check.witness = std::move(witness);
  }
}

/// Strict up-sets of every word in `words` under the rule-generated poset,
/// restricted to the window. Rules never lower the degree, so paths between
/// window elements stay inside the window.
std::vector<std::vector<std::size_t>> rule_upsets(const std::vector<Word>& words,
                                                  Family family, Letter n) {
  std::map<Word, std::size_t> idx;
  for (std::size_t i = 0; i < words.size(); ++i) idx.emplace(words[i], i);
  std::vector<std::vector<std::size_t>> succ(words.size());
  for (std::size_t u = 0; u < words.size(); ++u) {
    const auto& w = words[u];
    auto add = [&](const Word& next) {
      if (auto it = idx.find(next); it != idx.end()) succ[u].push_back(it->second);
    };
    for (const auto& c : covers_up(w, n)) add(c);
    if (family == Family::Q) {
      for (std::size_t j = 0; j + 1 < w.size(); ++j) {
        if (w[j] <= w[j + 1]) continue;
        std::vector<Letter> swapped(w.letters().begin(), w.letters().end());
        std::swap(swapped[j], swapped[j + 1]);
        add(Word(std::move(swapped)));
      }
    }
  }
  std::vector<std::vector<std::size_t>> up(words.size());
  for (std::size_t u = 0; u < words.size(); ++u) {
    std::set<std::size_t> seen;
    std::deque<std::size_t> frontier{u};
    while (!frontier.empty()) {
      const auto v = frontier.front();
      frontier.pop_front();
      for (auto s : succ[v]) {
        if (seen.insert(s).second) frontier.push_back(s);
      }
    }
    seen.erase(u);
    up[u].assign(seen.begin(), seen.end());
  }
  return up;
}

}  // namespace

TermOrderSpec TermOrderSpec::weighted(std::vector<std::uint64_t> weights) {
  if (weights.empty()) throw DomainError("weight order needs at least one weight");
  if (weights.front() == 0) throw DomainError("weights must be positive");
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weights[i] <= weights[i - 1]) {
      throw DomainError("weights must be strictly increasing");
    }
  }
  return {OrderKind::WeightDeg, std::move(weights)};
}

TermOrderSpec parse_order_spec(std::string_view text) {
  if (text == "deglex") return {OrderKind::DegLeftLex, {}};
  if (text == "degrevlex") return {OrderKind::DegRightLex, {}};
  constexpr std::string_view prefix = "weight:";
  if (!text.starts_with(prefix)) {
    throw ParseError("unknown order '" + std::string(text) + "'", 0);
  }
  std::vector<std::uint64_t> weights;
  auto rest = text.substr(prefix.size());
  std::size_t token = 1;
  while (true) {
    const auto comma = rest.find(',');
    const auto piece = rest.substr(0, comma);
    std::uint64_t w = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), w);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw ParseError("bad weight '" + std::string(piece) + "'", token);
    }
    weights.push_back(w);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    ++token;
  }
  try {
    return TermOrderSpec::weighted(std::move(weights));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string to_string(const TermOrderSpec& spec) {
  switch (spec.kind) {
    case OrderKind::DegLeftLex: return "deglex";
    case OrderKind::DegRightLex: return "degrevlex";
    case OrderKind::WeightDeg: {
      std::string out = "weight:";
      for (std::size_t i = 0; i < spec.weights.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.weights[i]);
      }
      return out;
    }
  }
  return "?";
}

Comparison order_compare(const TermOrderSpec& spec, const Word& m, const Word& m2) {
  switch (spec.kind) {
    case OrderKind::DegLeftLex: return left_lex(m, m2);
    case OrderKind::DegRightLex: return right_lex(m, m2);
    case OrderKind::WeightDeg: {
      const auto c = three_way(weight(spec, m), weight(spec, m2));
      return c == Comparison::EQ ? left_lex(m, m2) : c;
    }
  }
  return Comparison::EQ;
}

OrderReport validate_order(const TermOrderSpec& spec, Letter n, std::size_t max_degree) {
  OrderReport report{spec, n, max_degree, {}, {}, {}, {}, {}, {}};
  const auto words = words_up_to_degree(n, max_degree);
  const auto multipliers = words_up_to_degree(n, std::min(max_degree, kMultiplierDegree));
  const auto cmp = [&](const Word& a, const Word& b) { return order_compare(spec, a, b); };

  // Cache the full comparison table; transitivity is checked through it.
  const std::size_t count = words.size();
  std::vector<Comparison> table(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const auto c = cmp(words[i], words[j]);
      table[i * count + j] = c;
      if ((c == Comparison::EQ) != (i == j) || c == Comparison::INCOMPARABLE) {
        fail(report.total, pair_text(words[i], words[j]));
      }
      if (j < i && table[j * count + i] != flip(c)) {
        fail(report.total, pair_text(words[i], words[j]));
      }
    }
  }
  for (std::size_t i = 0; i < count && report.total.holds; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (table[i * count + j] != Comparison::LT) continue;
      for (std::size_t k = 0; k < count; ++k) {
        if (table[j * count + k] == Comparison::LT && table[i * count + k] != Comparison::LT) {
          fail(report.total, format_word(words[i]) + " < " + format_word(words[j]) + " < " +
                                 format_word(words[k]));
        }
      }
    }
  }

  const Word one;
  for (const auto& t : words) {
    if (!t.empty() && cmp(one, t) != Comparison::LT) fail(report.one_minimal, format_word(t));
  }

  for (Letter i = 1; i < n; ++i) {
    if (cmp(Word{i}, Word{i + 1}) != Comparison::LT) {
      fail(report.standard, pair_text(Word{i}, Word{i + 1}));
    }
  }

  for (std::size_t i = 0; i < count && report.multiplicative.holds; ++i) {
    for (std::size_t j = 0; j < count && report.multiplicative.holds; ++j) {
      if (table[i * count + j] != Comparison::LT) continue;
      for (const auto& a : multipliers) {
        for (const auto& b : multipliers) {
          const auto lhs = a.concat(words[i]).concat(b);
          const auto rhs = a.concat(words[j]).concat(b);
          if (cmp(lhs, rhs) != Comparison::LT) fail(report.multiplicative, pair_text(lhs, rhs));
        }
      }
    }
  }

  // t x_i x_j s > t x_j x_i s for i < j, within the degree window.
  for (const auto& t : words) {
    for (const auto& s : words) {
      if (t.size() + s.size() + 2 > max_degree) continue;
      for (Letter i = 1; i <= n; ++i) {
        for (Letter j = i + 1; j <= n; ++j) {
          const auto up = t.concat(Word{i, j}).concat(s);
          const auto down = t.concat(Word{j, i}).concat(s);
          if (cmp(up, down) != Comparison::GT) fail(report.sorted, pair_text(down, up));
        }
      }
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (words[i].size() < words[j].size() && table[i * count + j] != Comparison::LT) {
        fail(report.degree_compatible, pair_text(words[i], words[j]));
      }
    }
  }
  return report;
}

Containment contains_poset(const TermOrderSpec& spec, Family family, Letter n,
                           std::size_t max_degree) {
  if (family == Family::COMM) {
    throw DomainError("term orders on words cannot contain the commutative poset");
  }
  const auto words = words_up_to_degree(n, max_degree);
  auto check = [&](const Word& a, const Word& b) -> std::optional<Containment> {
    if (order_compare(spec, a, b) == Comparison::LT) return std::nullopt;
    return Containment{false, std::make_pair(a, b)};
  };
  if (family == Family::P) {
    for (const auto& a : words) {
      for (const auto& b : words) {
        if (a == b || !p_leq(a, b)) continue;
        if (auto bad = check(a, b)) return *bad;
      }
    }
    return {};
  }
  const auto up = rule_upsets(words, family, n);
  for (std::size_t u = 0; u < words.size(); ++u) {
    for (auto v : up[u]) {
      if (auto bad = check(words[u], words[v])) return *bad;
    }
  }
  return {};
}

}  // namespace ncposet
