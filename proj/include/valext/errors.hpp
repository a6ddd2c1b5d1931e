#pragma once

#include <stdexcept>
#include <string>

namespace valext {

/// Input outside an operation's mathematical domain (zero polynomial,
/// reducible defining polynomial, element outside the valuation ring, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured cap (degree, closure size, precision) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Working precision was too small to certify a result. Callers retry with
/// `suggested()` digits, which is twice the precision that failed.
class PrecisionError : public ResourceError {
 public:
  PrecisionError(const std::string& what, int suggested)
      : ResourceError(what), suggested_(suggested) {}
  int suggested() const noexcept { return suggested_; }

 private:
  int suggested_;
};

/// Malformed textual input. Carries the offending token and its 0-based
/// position in the input string.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string token, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position) +
                              " (token '" + token + "')"),
        message_(message),
        token_(std::move(token)),
        position_(position) {}
  const std::string& message() const noexcept { return message_; }
  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::string token_;
  std::size_t position_;
};

}  // namespace valext
