#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace groupchar {

enum class ErrorKind {
  Structural,            // misuse of an interface: mismatched groups, bad arguments
  Config,                // invalid run configuration
  BudgetExceeded,        // exhaustive enumeration would exceed its cost cap
  VanishingCharFunction, // a characteristic value is numerically zero
  NotASignedMeasure,     // inverse transform has a nonreal residue
  NotASolution,          // the product identity fails on this input
  NotDecomposable,       // expected structure (coset constancy, character) absent
  HypothesisViolated,    // a stated hypothesis of an operation fails on the data
  NotACharacter,         // multiplicativity test failed
  ConditionUndefined,    // conditioning event has zero probability
  DegenerateConditional, // conditional expectation too close to zero
  ConstraintViolated,    // an explicit numeric constraint fails
  InternalError,         // invariant the implementation relies on was violated
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  Error(ErrorKind kind, std::string message, std::vector<std::vector<int>> witness)
      : std::runtime_error(std::move(message)), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<std::vector<int>>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::vector<int>> witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string message) {
  throw Error(kind, std::move(message));
}

[[noreturn]] inline void fail(ErrorKind kind, std::string message,
                              std::vector<std::vector<int>> witness) {
  throw Error(kind, std::move(message), std::move(witness));
}

}  // namespace groupchar
