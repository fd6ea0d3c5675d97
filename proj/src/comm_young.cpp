#include "ncposet/comm_young.hpp"

#include <deque>
#include <set>

#include "ncposet/enumerate.hpp"
#include "ncposet/variants.hpp"

namespace ncposet {

Partition to_partition(const CommMonomial& t) {
  std::vector<std::uint64_t> parts(t.max_letter(), 0);
  // Suffix sums of the exponent vector.
  std::uint64_t running = 0;
  for (Letter j = t.max_letter(); j >= 1; --j) {
    running += t.exponent(j);
    parts[j - 1] = running;
  }
  return Partition(std::move(parts));
}

CommMonomial from_partition(const Partition& p) {
  std::map<Letter, std::uint32_t> exps;
  for (std::size_t i = 0; i < p.length(); ++i) {
    exps[static_cast<Letter>(i + 1)] =
        static_cast<std::uint32_t>(p.part(i) - p.part(i + 1));
  }
  return CommMonomial(std::move(exps));
}

bool comm_leq(const CommMonomial& t, const CommMonomial& t2, Bound n) {
  t.check_bound(n);
  t2.check_bound(n);
  return to_partition(t).contained_in(to_partition(t2));
}

bool comm_leq_oracle(const CommMonomial& t, const CommMonomial& t2) {
  if (t == t2) return true;
  const auto goal = to_partition(t2);
  // Multiplying by x1 adds e_1 to the partition and x_{i+1}/x_i adds
  // e_{i+1}, so states outside the goal's diagram are dead ends.
  std::set<CommMonomial> seen{t};
  std::deque<CommMonomial> frontier{t};
  while (!frontier.empty()) {
    const auto cur = std::move(frontier.front());
    frontier.pop_front();
    std::vector<CommMonomial> next{cur * CommMonomial::variable(1)};
    for (const auto& [letter, e] : cur.exponents()) {
      auto exps = cur.exponents();
      --exps[letter];
      ++exps[letter + 1];
      next.emplace_back(std::move(exps));
    }
    for (auto& w : next) {
      if (w == t2) return true;
      if (seen.contains(w) || !to_partition(w).contained_in(goal)) continue;
      seen.insert(w);
      frontier.push_back(std::move(w));
    }
  }
  return false;
}

std::size_t CoconnectionReport::violations() const noexcept {
  std::size_t count = 0;
  for (const auto& law : laws) count += law.holds() ? 0 : 1;
  return count;
}

CoconnectionReport check_coconnection(Letter n, std::uint64_t max_rank) {
  CoconnectionReport report{n, max_rank, {}};
  const auto words = words_up_to_rank(n, max_rank);
  const auto monomials = monomials_up_to_rank(n, max_rank);
  const QOrder q(n);

  LawResult sigma_monotone{"sigma order-preserving", 0, std::nullopt};
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (sigma_monotone.witness || !q.leq(a, b)) continue;
      ++sigma_monotone.checked;
      if (!comm_leq(abelianize(a), abelianize(b), n)) {
        sigma_monotone.witness = format_word(a) + " <= " + format_word(b);
      }
    }
  }

  LawResult sort_monotone{"sigma+ order-preserving", 0, std::nullopt};
  for (const auto& a : monomials) {
    for (const auto& b : monomials) {
      if (sort_monotone.witness || !comm_leq(a, b, n)) continue;
      ++sort_monotone.checked;
      if (!q.leq(sort_word(a), sort_word(b))) {
        sort_monotone.witness = format_monomial(a) + " <= " + format_monomial(b);
      }
    }
  }

  LawResult extensive{"sigma+ sigma(m) >= m", 0, std::nullopt};
  for (const auto& m : words) {
    if (extensive.witness) break;
    ++extensive.checked;
    if (!q.leq(m, sort_word(abelianize(m)))) extensive.witness = format_word(m);
  }

  LawResult coclosure{"sigma sigma+(w) <= w", 0, std::nullopt};
  for (const auto& w : monomials) {
    if (coclosure.witness) break;
    ++coclosure.checked;
    const auto back = abelianize(sort_word(w));
    if (back != w || !comm_leq(back, w, n)) coclosure.witness = format_monomial(w);
  }

  report.laws = {std::move(sigma_monotone), std::move(sort_monotone),
                 std::move(extensive), std::move(coclosure)};
  return report;
}

}  // namespace ncposet
