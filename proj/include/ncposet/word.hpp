#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncposet {

using Letter = std::uint32_t;

/// Optional alphabet size n. Absent means the countable alphabet x1, x2, ...
using Bound = std::optional<Letter>;

/// An element of the free monoid: a finite sequence of letter indices >= 1.
/// The empty word is the identity 1.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Largest letter index, 0 for the identity.
  Letter max_letter() const noexcept;

  /// Throws DomainError if a letter exceeds the bound.
  void check_bound(Bound n) const;

  Word concat(const Word& other) const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// An element of the free abelian monoid [X]: letter -> positive exponent.
class CommMonomial {
 public:
  CommMonomial() = default;
  /// Zero exponents are dropped.
  explicit CommMonomial(std::map<Letter, std::uint32_t> exponents);
  CommMonomial(std::initializer_list<std::pair<const Letter, std::uint32_t>> exponents)
      : CommMonomial(std::map<Letter, std::uint32_t>(exponents)) {}

  /// The single variable x_i.
  static CommMonomial variable(Letter i);

  const std::map<Letter, std::uint32_t>& exponents() const noexcept {
    return exponents_;
  }
  std::uint32_t exponent(Letter i) const;
  Letter max_letter() const noexcept;
  std::size_t total_degree() const noexcept;
  bool is_one() const noexcept { return exponents_.empty(); }

  void check_bound(Bound n) const;

  CommMonomial operator*(const CommMonomial& other) const;

  friend auto operator<=>(const CommMonomial&, const CommMonomial&) = default;

 private:
  std::map<Letter, std::uint32_t> exponents_;
};

/// A weakly decreasing, finitely supported sequence of naturals with trailing
/// zeros trimmed. Serves both as the multi-rank of a word and as a Young
/// lattice element.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<std::uint64_t> parts);
  /// Throws DomainError unless weakly decreasing; trailing zeros are trimmed.
  explicit Partition(std::vector<std::uint64_t> parts);

  std::span<const std::uint64_t> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  /// Part i (0-based); 0 beyond the stored length.
  std::uint64_t part(std::size_t i) const noexcept;
  std::uint64_t size() const noexcept;

  /// Componentwise (Young diagram) containment.
  bool contained_in(const Partition& other) const noexcept;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint64_t> parts_;
};

using MultiRank = Partition;

Word parse_word(std::string_view text);
std::string format_word(const Word& m);

CommMonomial parse_monomial(std::string_view text);
std::string format_monomial(const CommMonomial& t);

Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

/// sigma: the commutative image of a word.
CommMonomial abelianize(const Word& m);

/// sigma+: the sorted word with the given content.
Word sort_word(const CommMonomial& t);

/// R_j with 1-based position j.
Word raise(const Word& m, std::size_t position, Bound n = std::nullopt);

std::size_t degree(const Word& m) noexcept;

/// Phi: component j counts the letters of index >= j.
MultiRank multirank(const Word& m);

/// Sum of letter indices.
std::uint64_t rank(const Word& m) noexcept;

/// Rank of a commutative monomial, sum of i * a_i.
std::uint64_t rank(const CommMonomial& t) noexcept;

/// True iff u occurs as a contiguous subword of m.
bool is_factor(const Word& u, const Word& m) noexcept;

/// Canonical element order used for every emitted list: rank, then text.
bool canonical_less(const Word& a, const Word& b);
bool canonical_less(const CommMonomial& a, const CommMonomial& b);

/// Sorts into canonical order and removes duplicates.
void sort_canonical(std::vector<Word>& words);
void sort_canonical(std::vector<CommMonomial>& monomials);

}  // namespace ncposet
