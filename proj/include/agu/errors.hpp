#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace agu {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (terms, algebra files, element
/// names, query parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Term syntax error; carries the byte offset where parsing failed.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured enumeration or saturation cap was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

}  // namespace agu
