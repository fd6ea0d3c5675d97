#pragma once

#include <cstdint>
#include <vector>

#include "ncposet/word.hpp"

namespace ncposet {

/// m <= m2 in N (or N_n): some window of m2 dominates m letter by letter.
bool nc_leq(const Word& m, const Word& m2, Bound n = std::nullopt);

/// m <= m2 by breadth-first search over the generating rules
///   t -> x1 t,  t -> t x1,  t -> R_j(t).
/// Slow; kept as the reference the fast test is checked against.
bool nc_leq_oracle(const Word& m, const Word& m2, Bound n = std::nullopt);

/// Upper covers of m, canonical order.
std::vector<Word> covers_up(const Word& m, Bound n = std::nullopt);

/// Lower covers of m, canonical order. Identical in N and N_n.
std::vector<Word> covers_down(const Word& m);

/// Point of the lattice walk. Coordinates are truncated to the walk's
/// dimension (the largest letter, at least 1).
using LatticePoint = std::vector<std::uint64_t>;

/// Cumulative sums of the steps f_i = e_1 + ... + e_i along m. The endpoint
/// is multirank(m).
std::vector<LatticePoint> walk(const Word& m);

std::string format_point(const LatticePoint& p);

}  // namespace ncposet
