#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nckit {

// Raised when formula text cannot be tokenized or parsed. `position` is a
// 0-based byte offset into the input; `expected` lists the token classes
// that would have been accepted at that point.
class SyntaxError : public std::runtime_error {
public:
  SyntaxError(std::string message, std::size_t position,
              std::vector<std::string> expected = {})
      : std::runtime_error(std::move(message)),
        position(position),
        expected(std::move(expected)) {}

  std::size_t position;
  std::vector<std::string> expected;
};

// Raised when an enumeration (frame valuations, satisfiability search)
// would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::string message, std::uint64_t required,
                 std::uint64_t limit)
      : std::runtime_error(std::move(message)),
        required(required),
        limit(limit) {}

  std::uint64_t required;
  std::uint64_t limit;
};

// Raised for references to worlds that are not part of a frame or model.
class UnknownWorld : public std::runtime_error {
public:
  explicit UnknownWorld(const std::string& world)
      : std::runtime_error("unknown world: " + world), world(world) {}

  std::string world;
};

}  // namespace nckit
