#ifndef PGROWTH_ERRORS_HPP
#define PGROWTH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgrowth {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested field order has two distinct prime divisors.
class NotAPrimePowerError : public Error {
 public:
  using Error::Error;
};

/// Multiplicative inverse of zero.
class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// A point or line index outside [0, v) resp. [0, b).
class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Two lines with identical point sets where that is not allowed.
class DuplicateLineError : public Error {
 public:
  using Error::Error;
};

/// join/meet found more than one candidate (axiom violated for the pair).
class NotUniqueError : public Error {
 public:
  using Error::Error;
};

/// join/meet found no candidate (axiom violated for the pair).
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Bracket of an invalid pair (equal points, or both on the reference line).
class UndefinedBracketError : public Error {
 public:
  using Error::Error;
};

/// Malformed plane file. Carries 1-based line and column of the offence.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A verified statement failed on concrete data. Never expected; carries a
/// rendering of the offending trace so it can be dumped and investigated.
class TheoremViolationError : public Error {
 public:
  TheoremViolationError(const std::string& what, std::string trace_dump)
      : Error(what), trace_dump_(std::move(trace_dump)) {}

  const std::string& trace_dump() const { return trace_dump_; }

 private:
  std::string trace_dump_;
};

}  // namespace pgrowth

#endif  // PGROWTH_ERRORS_HPP
