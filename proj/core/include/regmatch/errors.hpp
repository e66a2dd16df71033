#ifndef REGMATCH_ERRORS_HPP
#define REGMATCH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regmatch {

/// Base class for all structured errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (graph6, MEL, matching files).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_ = 0;
};

/// Structurally valid input that the requested operation cannot accept:
/// infeasible generator parameters, unknown fixture names, non-regular
/// graphs handed to the constructor, oracle budgets exceeded.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition (non-matching passed as a
/// matching, sides of a declared-bipartite graph that share an edge, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A fact guaranteed by the underlying theory failed to hold at runtime.
/// These are never swallowed: the witness string carries the concrete
/// object (sets, degree counts) that contradicts the expected statement.
class TheoryViolation : public Error {
 public:
  TheoryViolation(const std::string& msg, std::string witness)
      : Error(msg), witness_(std::move(witness)) {}
  explicit TheoryViolation(const std::string& msg) : Error(msg) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

/// The input lies in a regime the constructor does not handle
/// (6-regular multigraphs, failed best-effort attempts for k >= 7).
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

}  // namespace regmatch

#endif
