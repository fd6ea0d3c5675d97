#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncposet {

/// Malformed word, monomial, partition or order text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t token)
      : std::invalid_argument(what), token_(token) {}

  /// 1-based index of the offending token (0 when the whole input is bad).
  std::size_t token() const noexcept { return token_; }

 private:
  std::size_t token_;
};

/// An operation applied outside its domain (raising past the alphabet bound,
/// a letter index of 0, an operand of the wrong element type, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation would exceed the configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultLimit = 1'000'000;

}  // namespace ncposet
