#pragma once

#include <cstdint>

namespace fplab {

// Process-wide execution limits. The budget counts domain points touched by
// exhaustive enumerations; every expensive entry point calls charge() with its
// predicted cost before doing any work.
struct Limits {
  std::uint64_t point_budget = 200'000'000;
  int threads = 0;  // 0 means use the hardware concurrency
  std::uint64_t used = 0;  // points charged so far, for cost reporting
};

Limits& limits();

// Throws BudgetError if `points` exceeds the configured budget.
void charge(std::uint64_t points);

int resolved_threads();

}  // namespace fplab
