#pragma once

#include <stdexcept>
#include <string>

namespace fairalloc {

/// Precondition or invariant breach in a caller-supplied value.
class ContractViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The requested operation is not defined for this valuation class.
class Unsupported : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive oracle refused to run because the search space exceeds
/// the configured budget. Carries the offending count as a decimal string.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string& what, std::string count)
      : std::runtime_error(what), count_(std::move(count)) {}
  const std::string& count() const { return count_; }

private:
  std::string count_;
};

}  // namespace fairalloc
