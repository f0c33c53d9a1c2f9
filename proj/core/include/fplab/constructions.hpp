#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fplab/counting.hpp"
#include "fplab/fp_matrix.hpp"
#include "fplab/linear_system.hpp"
#include "fplab/polynomial.hpp"
#include "fplab/rational.hpp"
#include "fplab/table.hpp"

namespace fplab {

// pi_s = x_1^s + ... + x_n^s. Requires s < p so the exponents survive
// canonicalization unchanged.
Polynomial power_polynomial(int s, std::int32_t p, int n);

struct WitnessNorm {
  int i = 0;       // form index
  int s = 1;       // norm order used
  double u_norm = 0.0;
  std::optional<Rational> exact_power;  // exact 2^s-th power when available
};

// The product-average-one witness for a dependent system: functions
// f_i = omega^{sum_j mu_j c_{ji} pi_{s_j}} built from per-form relations
// sum_j c_{ij} L_j^{s_i} = 0 with c_{ii} != 0. Every claim is re-certified
// numerically: the exact product average and each |f_i|_{U^{s_i}}.
struct OffDiagonalWitness {
  LinearSystem system;
  std::vector<int> degrees;
  FpMatrix relations;  // m x m, row i = c_{i.}
  std::vector<std::int32_t> multipliers;
  std::vector<Polynomial> exponents;  // exponent polynomial of f_i
  std::vector<TableFunction> functions;
  CountReport certification;  // exact product average over the system
  std::vector<WitnessNorm> norms;
  std::uint64_t seed = 0;
  int draws = 0;  // multiplier redraws used
};

// Builds the witness, or throws: a contract error naming the form whose
// power is independent (no usable relation), or one reporting that 100
// multiplier draws all hit the cancellation set (p too small).
OffDiagonalWitness offdiagonal_example(const LinearSystem& system,
                                       const std::vector<int>& degrees, int n,
                                       std::uint64_t seed);

// Diagonal special case plus the set variant A = {x : pi_s(x) in S}.
struct DependentWitness {
  OffDiagonalWitness functions;
  TableFunction set_indicator;
  Rational set_density;
  CountReport set_report;  // exact density, expected product, deviation
  double balanced_unorm;   // |A - delta 1|_{U^s}
};

DependentWitness dependent_counterexample(
    const LinearSystem& system, int s, int n, std::uint64_t seed,
    const std::vector<std::int32_t>& level_residues = {0});

}  // namespace fplab
