#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ybx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed cycle notation.
class CycleParseError : public Error {
 public:
  enum class Kind { UnknownLabel, RepeatedLabel, Malformed };

  CycleParseError(Kind kind, const std::string& what, char label = '\0')
      : Error(what), kind_(kind), label_(label) {}

  Kind kind() const { return kind_; }
  /// Offending label for UnknownLabel / RepeatedLabel.
  char label() const { return label_; }

 private:
  Kind kind_;
  char label_;
};

/// Malformed solution file; carries the 1-based line number (0 when the
/// problem is global, e.g. an empty file).
class FileParseError : public Error {
 public:
  FileParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A group closure exceeded its configured order bound.
class GroupTooLarge : public Error {
 public:
  explicit GroupTooLarge(std::size_t bound)
      : Error("group order exceeds bound " + std::to_string(bound)),
        bound_(bound) {}

  std::size_t bound() const { return bound_; }

 private:
  std::size_t bound_;
};

/// Two independent computations disagreed, or an internal invariant that
/// holds for every valid input was violated.
class InternalCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace ybx
