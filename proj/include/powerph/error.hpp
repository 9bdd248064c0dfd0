#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powerph {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition on caller-supplied data does not hold (disconnected graph,
/// chain that is not a cycle, selector out of range, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured work or memory budget would be exceeded.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t count)
      : Error(what + " (count " + std::to_string(count) + ")"), count_(count) {}
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

}  // namespace powerph
