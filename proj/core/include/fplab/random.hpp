#pragma once

#include <cstdint>
#include <random>

#include "fplab/field.hpp"

namespace fplab {

// Seeded generator with hand-rolled bounded draws. std::mt19937_64 output is
// specified bit for bit, while the standard distributions are not; drawing by
// modulo keeps every fixture reproducible across platforms (the tiny bias is
// irrelevant here).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t below(std::uint64_t bound) {
    return bound == 0 ? 0 : engine_() % bound;
  }

  std::int32_t residue(std::int32_t p) {
    return static_cast<std::int32_t>(below(static_cast<std::uint64_t>(p)));
  }

  std::int32_t nonzero_residue(std::int32_t p) {
    return 1 + static_cast<std::int32_t>(below(static_cast<std::uint64_t>(p - 1)));
  }

  Point point(std::int32_t p, int n) {
    Point x(static_cast<std::size_t>(n));
    for (auto& c : x) c = residue(p);
    return x;
  }

  double unit_real() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fplab
