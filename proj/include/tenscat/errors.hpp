#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace tenscat {

// Input outside an operation's mathematical domain.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configured resource bound was exceeded.
class BoundError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed; signals a bug, not bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Malformed text literal; offset() points at the offending character of input().
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::string input, std::size_t offset)
      : std::runtime_error(msg), input_(std::move(input)), offset_(offset) {}

  const std::string& input() const noexcept { return input_; }
  std::size_t offset() const noexcept { return offset_; }

private:
  std::string input_;
  std::size_t offset_;
};

}  // namespace tenscat
