#pragma once

#include <stdexcept>
#include <string>

namespace wildcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural problems with a graph or with a point/path on it.
class GraphError : public Error {
 public:
  enum class Kind {
    kInvalidIdentifier,
    kDuplicateIdentifier,
    kDanglingEndpoint,
    kUnknownIdentifier,
    kDisconnected,
    kNotAForest,
    kNotACycle,
    kHasCycle,
    kInvalidPoint,
    kInvalidPath,
    kMismatch,
  };

  GraphError(Kind kind, std::string offending_id, const std::string& message)
      : Error(message), kind_(kind), offending_id_(std::move(offending_id)) {}

  Kind kind() const { return kind_; }
  const std::string& offending_id() const { return offending_id_; }

 private:
  Kind kind_;
  std::string offending_id_;
};

/// Text-format errors carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Raised when a space expression fails the w-stability test and no special
/// case covers it.
class UnstableExpressionError : public Error {
 public:
  using Error::Error;
};

/// Raised by operations that need a finite wildness rank.
class InfiniteRankError : public Error {
 public:
  using Error::Error;
};

/// Raised by operations that reject the special atoms (selfwild / zerodimwild).
class AtomError : public Error {
 public:
  using Error::Error;
};

/// Raised when a filtration fails validation.
class FiltrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace wildcat
