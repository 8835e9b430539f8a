#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cfc {

// Malformed graph document. line is 1-based, 0 when not tied to a line.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A precondition of an operation does not hold (disconnected graph,
// vertex outside a block, parameters out of range, ...).
class hypothesis_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive path enumeration hit its cap; the instance is too large.
class path_cap_exceeded : public std::runtime_error {
 public:
  explicit path_cap_exceeded(std::uint64_t cap)
      : std::runtime_error("simple path enumeration exceeded cap of " + std::to_string(cap)),
        cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

// The exact search ran out of nodes. The answer is unknown.
class budget_exhausted : public std::runtime_error {
 public:
  explicit budget_exhausted(std::uint64_t budget)
      : std::runtime_error("search budget of " + std::to_string(budget) + " nodes exhausted"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

}  // namespace cfc
