#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fplab {

// Violated precondition or malformed input. Maps to exit code 3 in the CLI.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested work exceeds the configured point budget. Maps to exit code 2.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t estimated, std::uint64_t cap)
      : std::runtime_error("estimated cost " + std::to_string(estimated) +
                           " points exceeds budget of " + std::to_string(cap)),
        estimated(estimated),
        cap(cap) {}

  std::uint64_t estimated;
  std::uint64_t cap;
};

}  // namespace fplab
