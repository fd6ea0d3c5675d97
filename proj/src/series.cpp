#include "ncposet/series.hpp"

#include <string>

namespace ncposet {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceError("coefficient overflows 64 bits");
  return out;
}

}  // namespace

CoefficientTable rank_coefficients(Bound n, std::uint64_t max_rank) {
  CoefficientTable table{n, {}};
  auto& c = table.coefficients;
  c.reserve(max_rank + 1);
  // Denominator 1 - 2t (+ t^(n+1)), numerator 1 - t. All terms stay
  // non-negative, so the recurrence is evaluated as sums and differences of
  // naturals: c_k = 2 c_{k-1} - c_{k-n-1} - [k == 1].
  for (std::uint64_t k = 0; k <= max_rank; ++k) {
    if (k == 0) {
      c.push_back(1);
      continue;
    }
    std::uint64_t value = checked_add(c[k - 1], c[k - 1]);
    if (k == 1) value -= 1;
    if (n && k >= std::uint64_t{*n} + 1) value -= c[k - *n - 1];
    c.push_back(value);
  }
  return table;
}

CoefficientTable enumerate_by_rank(Bound n, std::uint64_t max_rank, std::size_t limit) {
  if (n && *n == 0) throw DomainError("alphabet must have at least one letter");
  CoefficientTable table{n, std::vector<std::uint64_t>(max_rank + 1, 0)};
  std::uint64_t produced = 0;
  const std::uint64_t alphabet = n ? std::min<std::uint64_t>(*n, max_rank) : max_rank;
  // Walk every composition of each rank with parts <= alphabet.
  auto extend = [&](auto&& self, std::uint64_t r) -> void {
    ++table.coefficients[r];
    if (++produced > limit) {
      throw ResourceError("enumeration exceeds the limit of " + std::to_string(limit) + " words");
    }
    for (std::uint64_t i = 1; i <= alphabet && r + i <= max_rank; ++i) self(self, r + i);
  };
  extend(extend, 0);
  return table;
}

std::uint64_t content_count(const CommMonomial& t) {
  // Product of binomials C(prefix, a_i), each exact.
  std::uint64_t result = 1;
  std::uint64_t placed = 0;
  for (const auto& [letter, e] : t.exponents()) {
    for (std::uint32_t k = 1; k <= e; ++k) {
      ++placed;
      unsigned __int128 next = static_cast<unsigned __int128>(result) * placed;
      next /= k;
      if (next > UINT64_MAX) throw ResourceError("content count overflows 64 bits");
      result = static_cast<std::uint64_t>(next);
    }
  }
  return result;
}

}  // namespace ncposet
