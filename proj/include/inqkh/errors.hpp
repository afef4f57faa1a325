#pragma once

#include <stdexcept>
#include <string>

namespace inqkh {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text.
struct ParseError : Error {
  ParseError(std::size_t pos, const std::string& what)
      : Error("parse error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
  std::size_t position;
};

// Violated structural invariant (e.g. Kh over a modal body, bad tensor arity).
struct StructureError : Error {
  using Error::Error;
};

// Operation undefined on the given arguments (e.g. restriction to the empty set).
struct DomainError : Error {
  using Error::Error;
};

// A configured enumeration limit was exceeded.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace inqkh
