#pragma once

#include <cstdint>
#include <vector>

#include "ncposet/errors.hpp"
#include "ncposet/word.hpp"

namespace ncposet {

/// Number of words of each rank 0..K.
struct CoefficientTable {
  Bound n;
  std::vector<std::uint64_t> coefficients;

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

/// Power-series coefficients of (1 - t) / (1 - 2t) (unbounded) or
/// (1 - t) / (1 - 2t + t^(n+1)) (n letters), up to t^K. Throws ResourceError
/// if a coefficient overflows 64 bits.
CoefficientTable rank_coefficients(Bound n, std::uint64_t max_rank);

/// Direct count of words by rank, letters capped at n (or K when unbounded).
CoefficientTable enumerate_by_rank(Bound n, std::uint64_t max_rank,
                                   std::size_t limit = kDefaultLimit);

/// Number of words with the given content: the multinomial coefficient
/// d! / (a_1! a_2! ...). This is the coefficient of the monomial in
/// 1 / (1 - sum t^i x_i), and also the number of words with a given multirank.
std::uint64_t content_count(const CommMonomial& t);

}  // namespace ncposet
