#pragma once

#include <stdexcept>
#include <string>

namespace fermatlines {

// A caller passed arguments outside an operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A computed object violated a mathematical invariant. Seeing one of these
// means either an arithmetic bug or a counterexample to a proven statement.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fermatlines
