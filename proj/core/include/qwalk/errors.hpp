#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwalk {

/// A caller-side contract was violated (bad input graph, wrong regime, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A checkpoint file could not be trusted.
class CheckpointError : public std::runtime_error {
 public:
  CheckpointError(const std::string& what, long long partition)
      : std::runtime_error(partition >= 0
                               ? what + " (partition " + std::to_string(partition) + ")"
                               : what),
        partition_(partition) {}

  long long partition() const noexcept { return partition_; }

 private:
  long long partition_;
};

}  // namespace qwalk
