#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fplab {

// Fixture knobs shared by every registered check. A check clamps coordinates
// it cannot honour (a degree beyond n(p-1), an enumeration beyond what the
// check affords) and reports the values it actually used.
struct CheckFixture {
  std::int32_t p = 3;
  int n = 2;
  int d = 2;
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string id;
  CheckFixture fixture;  // effective values after clamping
  double lhs = 0.0;
  double rhs = 0.0;
  std::string relation;  // "<=", "==", or "pointwise"
  bool pass = false;
  double tolerance = 0.0;  // 0 marks an exact integer or rational comparison
  std::uint64_t cost = 0;  // points enumerated
  std::string note;
};

// Registered check ids, in registry order.
const std::vector<std::string>& check_ids();

// Runs a single check; unknown ids are contract errors.
CheckResult run_check(const std::string& id, const CheckFixture& fixture);

struct PlannedCheck {
  std::string id;
  CheckFixture fixture;
};

// Fixture grid of a named suite ("core"). Per-fixture seeds derive
// deterministically from `seed`, so equal seeds give equal results.
std::vector<PlannedCheck> suite_plan(const std::string& suite,
                                     std::uint64_t seed);

std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t seed);

}  // namespace fplab
