#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rank3 {

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// MeatAxe gave up before reaching a certified answer.
struct UndecidedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

}  // namespace rank3
