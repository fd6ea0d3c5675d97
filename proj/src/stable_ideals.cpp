#include "ncposet/stable_ideals.hpp"

#include <algorithm>

#include "ncposet/enumerate.hpp"
#include "ncposet/errors.hpp"
#include "ncposet/nc_poset.hpp"

namespace ncposet {

IdealGens::IdealGens(Letter n, std::vector<Word> gens) : n_(n), gens_(std::move(gens)) {
  if (n_ == 0) throw DomainError("ideal needs an alphabet of at least one letter");
  for (const auto& g : gens_) g.check_bound(n_);
  sort_canonical(gens_);
  for (const auto& a : gens_) {
    for (const auto& b : gens_) {
      if (a != b && is_factor(a, b)) {
        throw DomainError("generators " + format_word(a) + " and " + format_word(b) +
                          " are not an antichain");
      }
    }
  }
}

IdealGens minimalize(std::vector<Word> gens, Letter n) {
  sort_canonical(gens);
  std::vector<Word> kept;
  for (const auto& g : gens) {
    // Canonical order lists every proper factor of g before g.
    const bool redundant = std::ranges::any_of(kept, [&](const Word& k) { return is_factor(k, g); });
    if (!redundant) kept.push_back(g);
  }
  return IdealGens(n, std::move(kept));
}

bool ideal_member(const Word& m, const IdealGens& ideal) {
  return std::ranges::any_of(ideal.gens(), [&](const Word& g) { return is_factor(g, m); });
}

IdealGens strongly_stable_closure(const IdealGens& ideal) {
  // Letters are capped at n and degrees never grow, so this reaches a fixpoint.
  auto current = ideal;
  while (true) {
    std::vector<Word> next = current.gens();
    for (const auto& g : current.gens()) {
      for (std::size_t j = 1; j <= g.size(); ++j) {
        if (g[j - 1] < current.n()) next.push_back(raise(g, j, current.n()));
      }
    }
    auto reduced = minimalize(std::move(next), current.n());
    if (reduced == current) return current;
    current = std::move(reduced);
  }
}

StabilityReport is_strongly_stable(const IdealGens& ideal, std::uint64_t rank_bound) {
  StabilityReport report;
  for (const auto& m : words_up_to_rank(ideal.n(), rank_bound)) {
    if (!ideal_member(m, ideal)) continue;
    for (const auto& c : covers_up(m, ideal.n())) {
      if (rank(c) > rank_bound || ideal_member(c, ideal)) continue;
      report.window_closed = false;
      report.witness = std::make_pair(m, c);
      break;
    }
    if (!report.window_closed) break;
  }
  for (const auto& g : ideal.gens()) {
    for (std::size_t j = 1; j <= g.size() && report.generators_closed; ++j) {
      if (g[j - 1] >= ideal.n()) continue;
      auto raised = raise(g, j, ideal.n());
      if (ideal_member(raised, ideal)) continue;
      report.generators_closed = false;
      if (!report.witness) report.witness = std::make_pair(g, std::move(raised));
    }
  }
  return report;
}

}  // namespace ncposet
