#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "ncposet/word.hpp"

namespace ncposet {

enum class Family { NC, Q, P, COMM };

std::string to_string(Family f);
/// Accepts "nc", "q", "p", "comm".
Family parse_family(std::string_view text);

/// Selects one of the posets and its alphabet bound.
struct PosetHandle {
  Family family = Family::NC;
  Bound n;

  /// COMM handles take monomials, the others take words.
  bool takes_monomials() const noexcept { return family == Family::COMM; }
};

using Element = std::variant<Word, CommMonomial>;

enum class Comparison { LT, GT, EQ, INCOMPARABLE };

std::string to_string(Comparison c);

/// Directed test a <= b in the chosen poset. Throws DomainError when an
/// operand's type does not match the handle.
bool leq(const PosetHandle& h, const Element& a, const Element& b);

Comparison compare(const PosetHandle& h, const Element& a, const Element& b);

/// Parses an operand as the element type the handle expects.
Element parse_element(const PosetHandle& h, std::string_view text);
std::string format_element(const Element& e);

}  // namespace ncposet
