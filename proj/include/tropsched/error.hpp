#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropsched {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (non-square trace, inner dimension mismatch).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its domain (inverse of zero, conjugate of
/// the zero vector, non-regular right-hand side).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The Kleene star does not exist because the graph of the matrix carries a
/// cycle of positive weight. `cycle()` lists the node indices (0-based) of one
/// such cycle, first node not repeated at the end.
class PositiveCycleError : public Error {
 public:
  PositiveCycleError(const std::string& what, std::vector<std::size_t> cycle)
      : Error(what), cycle_(std::move(cycle)) {}
  const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::size_t> cycle_;
};

/// A problem instance admits no solution.
class InfeasibleError : public Error {
 public:
  enum class Kind {
    linear_constraint,   // Tr(B) > 1
    box_conflict,        // h^- B^* g > 1
    degenerate_objective,
    inconsistent_bounds,
  };

  InfeasibleError(Kind kind, const std::string& what,
                  std::vector<std::size_t> cycle = {})
      : Error(what), kind_(kind), cycle_(std::move(cycle)) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

 private:
  Kind kind_;
  std::vector<std::size_t> cycle_;
};

/// Malformed input document. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : ParseError(std::string(), what, line) {}

  /// The same error, reported against `path` ("path:line: message").
  ParseError in_file(const std::string& path) const { return ParseError(path, message_, line_); }

  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ParseError(const std::string& path, const std::string& message, std::size_t line)
      : Error(format(path, message, line)), message_(message), line_(line) {}

  static std::string format(const std::string& path, const std::string& message, std::size_t line) {
    std::string out = path;
    if (line) out += (out.empty() ? "line " : ":") + std::to_string(line);
    if (!out.empty()) out += ": ";
    return out + message;
  }

  std::string message_;
  std::size_t line_;
};

}  // namespace tropsched
