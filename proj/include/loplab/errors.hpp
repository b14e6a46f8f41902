#pragma once

#include <stdexcept>
#include <string>

namespace loplab {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-contract input: arity mismatches, bad indices,
/// length mismatches, singular matrices.
class RejectedInputError : public Error {
 public:
  using Error::Error;
};

/// Exact computation would exceed the configured brute-force limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Text parsing failure; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A query log contains two conflicting answers for one query.
class InvalidLogError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant that should be unreachable was violated,
/// e.g. the solver exceeded its iteration budget.
class DefectError : public Error {
 public:
  using Error::Error;
};

}  // namespace loplab
