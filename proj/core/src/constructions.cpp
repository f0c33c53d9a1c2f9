#include "fplab/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "fplab/errors.hpp"
#include "fplab/multilinear.hpp"
#include "fplab/phase.hpp"
#include "fplab/random.hpp"
#include "fplab/system_analysis.hpp"
#include "fplab/uniformity.hpp"

namespace fplab {

Polynomial power_polynomial(int s, std::int32_t p, int n) {
  if (s < 1) throw ContractError("power must be at least 1");
  if (s >= p) {
    throw ContractError(
        "power must stay below the field characteristic");
  }
  Polynomial pi(p, n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::int32_t> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = s;
    pi.add_term(std::move(e), 1);
  }
  return pi;
}

namespace {

// A relation sum_j c_j L_j^s = 0 with c_i != 0, from the row-relation space
// of the s-power matrix; absent when the i-th power is independent.
std::optional<std::vector<std::int32_t>> relation_through(
    const LinearSystem& system, int s, int i) {
  const FpMatrix m = power_coefficient_matrix(system, s);
  const auto summary = eliminate(m);
  for (const auto& lambda : summary.row_relations) {
    if (lambda[static_cast<std::size_t>(i)] != 0) return lambda;
  }
  return std::nullopt;
}

// sum_j c_j (pi o L_j) as a polynomial in n*d variables.
Polynomial composed_relation(const Polynomial& pi, const LinearSystem& system,
                             const std::vector<std::int32_t>& c) {
  Polynomial sum(pi.p(), pi.n() * system.d());
  for (int j = 0; j < system.m(); ++j) {
    if (c[static_cast<std::size_t>(j)] == 0) continue;
    sum = sum.plus(pi.compose_blocks(system.form(j).coeffs)
                       .scaled(c[static_cast<std::size_t>(j)]));
  }
  return sum;
}

}  // namespace

OffDiagonalWitness offdiagonal_example(const LinearSystem& system,
                                       const std::vector<int>& degrees, int n,
                                       std::uint64_t seed) {
  const std::int32_t p = system.p();
  const int m = system.m();
  if (degrees.size() != static_cast<std::size_t>(m)) {
    throw ContractError("need one degree per form");
  }
  for (const int s : degrees) {
    if (s < 1 || s >= p) {
      throw ContractError("degrees must lie in [1, p)");
    }
  }
  const PrimeModulus mod(p);

  // Per-form relations c_{i.} with c_{ii} != 0.
  FpMatrix relations(p, m, m);
  for (int i = 0; i < m; ++i) {
    const auto c = relation_through(system, degrees[static_cast<std::size_t>(i)], i);
    if (!c) {
      throw ContractError(
          "construction impossible: power " +
          std::to_string(degrees[static_cast<std::size_t>(i)]) + " of form " +
          std::to_string(i + 1) +
          " is independent of the other powers, so no relation through it "
          "exists");
    }
    for (int j = 0; j < m; ++j) {
      relations.set(i, j, (*c)[static_cast<std::size_t>(j)]);
    }
    // The relation annihilates the composed power polynomial identically.
    const Polynomial zero = composed_relation(
        power_polynomial(degrees[static_cast<std::size_t>(i)], p, n), system,
        *c);
    if (!zero.is_zero()) {
      throw ContractError("relation failed the symbolic zero check");
    }
  }

  // Multipliers: redraw until every f_i keeps a nonzero coefficient on its
  // own power polynomial, i.e. sum over {j : s_j = s_i} of mu_j c_{ji} != 0.
  Rng rng(seed);
  std::vector<std::int32_t> mu(static_cast<std::size_t>(m), 0);
  int draws = 0;
  bool ok = false;
  while (draws < 100 && !ok) {
    ++draws;
    for (auto& v : mu) v = rng.residue(p);
    ok = true;
    for (int i = 0; i < m && ok; ++i) {
      std::int32_t own = 0;
      for (int j = 0; j < m; ++j) {
        if (degrees[static_cast<std::size_t>(j)] ==
            degrees[static_cast<std::size_t>(i)]) {
          own = mod.add(own, mod.mul(mu[static_cast<std::size_t>(j)],
                                     relations.at(j, i)));
        }
      }
      ok = own != 0;
    }
  }
  if (!ok) {
    throw ContractError(
        "100 multiplier draws all cancelled an own-power coefficient; the "
        "characteristic is too small for this system");
  }

  OffDiagonalWitness witness{system,
                             degrees,
                             std::move(relations),
                             mu,
                             {},
                             {},
                             CountReport{},
                             {},
                             seed,
                             draws};

  for (int i = 0; i < m; ++i) {
    Polynomial exponent(p, n);
    for (int j = 0; j < m; ++j) {
      const std::int32_t coeff =
          mod.mul(mu[static_cast<std::size_t>(j)], witness.relations.at(j, i));
      if (coeff == 0) continue;
      exponent = exponent.plus(
          power_polynomial(degrees[static_cast<std::size_t>(j)], p, n)
              .scaled(coeff));
    }
    witness.exponents.push_back(std::move(exponent));
  }
  for (const auto& pi : witness.exponents) {
    witness.functions.push_back(phase_table(pi));
  }

  witness.certification = phase_system_average(witness.exponents, system);

  for (int i = 0; i < m; ++i) {
    const int s = degrees[static_cast<std::size_t>(i)];
    const auto& pi = witness.exponents[static_cast<std::size_t>(i)];
    WitnessNorm norm;
    norm.i = i;
    norm.s = s;
    if (pi.degree() <= s) {
      const Rational power = exact_phase_unorm_power(pi, s);
      norm.exact_power = power;
      norm.u_norm = std::pow(power.to_double(), 1.0 / std::ldexp(1.0, s));
    } else {
      const auto census = phase_unorm_census(pi, s);
      if (const auto exact = census.exact_real_mean()) {
        norm.exact_power = exact;
        norm.u_norm = std::pow(std::max(exact->to_double(), 0.0),
                               1.0 / std::ldexp(1.0, s));
      } else {
        RootTable roots(p);
        norm.u_norm = std::pow(std::max(census.mean(roots).real(), 0.0),
                               1.0 / std::ldexp(1.0, s));
      }
    }
    witness.norms.push_back(std::move(norm));
  }
  return witness;
}

DependentWitness dependent_counterexample(
    const LinearSystem& system, int s, int n, std::uint64_t seed,
    const std::vector<std::int32_t>& level_residues) {
  const std::int32_t p = system.p();
  std::vector<int> degrees(static_cast<std::size_t>(system.m()), s);
  OffDiagonalWitness functions = offdiagonal_example(system, degrees, n, seed);

  const Polynomial pi = power_polynomial(s, p, n);
  const PrimeModulus mod(p);
  std::vector<bool> wanted(static_cast<std::size_t>(p), false);
  for (const auto r : level_residues) {
    wanted[static_cast<std::size_t>(mod.reduce(r))] = true;
  }
  const std::uint64_t points = domain_size(p, n);
  TableFunction indicator(p, n);
  for (std::uint64_t x = 0; x < points; ++x) {
    if (wanted[static_cast<std::size_t>(pi.eval(decode_point(p, x, n)))]) {
      indicator[x] = 1.0;
    }
  }

  const Rational density = indicator_density(indicator);
  std::vector<TableFunction> sets(static_cast<std::size_t>(system.m()),
                                  indicator);
  CountReport report = set_solution_density(sets, system);
  const double balanced_norm =
      gowers_norm(balanced_part(indicator), s).value;

  return DependentWitness{std::move(functions), std::move(indicator), density,
                          std::move(report), balanced_norm};
}

}  // namespace fplab
