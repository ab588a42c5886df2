#pragma once

#include <stdexcept>
#include <string>

namespace selrec {

// Raised when an evaluation runs out of its unfolding budget. Divergent
// schemes surface as this rather than hanging.
struct FuelExhausted : std::runtime_error {
  FuelExhausted() : std::runtime_error("fuel exhausted") {}
};

// A bounded search ran past its proven upper bound.
struct SearchFailed : std::runtime_error {
  explicit SearchFailed(const std::string& what) : std::runtime_error(what) {}
};

// A declared functional contract (modulus, bound) was breached at run time.
struct ContractViolation : std::runtime_error {
  explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

// Instance document is well-formed text but breaks an invariant.
struct ValidationError : std::runtime_error {
  ValidationError(std::string field_, const std::string& what)
      : std::runtime_error(what), field(std::move(field_)) {}
  std::string field;
};

// Instance document is not syntactically readable.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace selrec
