#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace afscope {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. `line` and `column` are 1-based; 0 means the
/// position is unknown (e.g. a JSON schema violation reported by path).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// Message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// Input exceeds the framework size guardrail.
class LimitError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A precondition on an operation's arguments does not hold
/// (unknown edge, labelling inconsistent with a framework, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An ordinal (solution index, critical-set index) is past the end.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A long-running search was aborted through its cancellation check.
class Cancelled : public Error {
 public:
  Cancelled() : Error("operation cancelled") {}
};

}  // namespace afscope
