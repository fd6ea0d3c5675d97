#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncposet/errors.hpp"
#include "ncposet/word.hpp"

namespace ncposet {

/// All words over x1..xn (letters <= max_rank when unbounded) whose rank is
/// at most max_rank, in canonical order. Throws ResourceError past limit.
std::vector<Word> words_up_to_rank(Bound n, std::uint64_t max_rank,
                                   std::size_t limit = kDefaultLimit);

/// All words over x1..xn of degree at most max_degree, in canonical order.
std::vector<Word> words_up_to_degree(Letter n, std::size_t max_degree,
                                     std::size_t limit = kDefaultLimit);

/// All commutative monomials over x1..xn (letters <= max_rank when
/// unbounded) of rank at most max_rank, in canonical order.
std::vector<CommMonomial> monomials_up_to_rank(Bound n, std::uint64_t max_rank,
                                               std::size_t limit = kDefaultLimit);

}  // namespace ncposet
