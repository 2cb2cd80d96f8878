#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infocons {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subsystem dimensions disagree, or an index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates the invariants of its type (non-Hermitian, unnormalized,
/// negative probability, non-unitary, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Generalized deleting map whose ancilla outputs are not nearer than the inputs.
class NotADeletingMap : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A Discard stage was supplied for a closed-regime scenario.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Scenario file diagnostics. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string key, const std::string& what)
      : Error(format(line, key, what)), line_(line), key_(std::move(key)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }

 private:
  static std::string format(std::size_t line, const std::string& key, const std::string& what) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!key.empty()) out += "key '" + key + "': ";
    return out + what;
  }

  std::size_t line_;
  std::string key_;
};

}  // namespace infocons
