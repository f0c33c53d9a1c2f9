#include "fplab/limits.hpp"

#include <thread>

#include "fplab/errors.hpp"

namespace fplab {

Limits& limits() {
  static Limits instance;
  return instance;
}

void charge(std::uint64_t points) {
  const std::uint64_t cap = limits().point_budget;
  if (points > cap) throw BudgetError(points, cap);
  limits().used += points;
}

int resolved_threads() {
  const int configured = limits().threads;
  if (configured > 0) return configured;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace fplab
