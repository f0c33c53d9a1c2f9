#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fplab/fp_matrix.hpp"
#include "fplab/linear_system.hpp"
#include "fplab/polynomial.hpp"
#include "fplab/rational.hpp"
#include "fplab/residue.hpp"
#include "fplab/table.hpp"

namespace fplab {

struct CountReport {
  std::complex<double> average{0.0, 0.0};
  // Exact value when the backend counted integers and the histogram collapsed.
  std::optional<Rational> exact_real_average;
  std::optional<ResidueCounter> residue_histogram;  // all-phase backend
  std::optional<Rational> density;                  // set variant
  std::optional<Rational> expected_product;         // prod of set densities
  std::optional<Rational> deviation;                // density - expected
  std::uint64_t cost = 0;
  std::string method;  // "direct" or "reparametrized"
};

// Factorization C = mixing * reduced of the selected coefficient rows, with
// `reduced` of full row rank rho. Substituting y = reduced * x (blockwise over
// the n coordinates) turns the m argument points (L_i(x)) into mixing * y with
// y uniform over (F_p^n)^rho, cutting enumeration from p^{nd} to p^{n rho}.
struct Reparametrization {
  FpMatrix mixing;   // |rows| x rho
  FpMatrix reduced;  // rho x d, echelon
  int rho = 0;
};

Reparametrization reparametrize(const LinearSystem& system,
                                const std::vector<int>& subset = {});

// E_x prod_{i in subset} f_i(L_i(x)). `functions` has one entry per form;
// an empty subset means all of them. Cost p^{n rho} points (p^{nd} when
// `reparametrized` is false), charged.
CountReport system_average(const std::vector<TableFunction>& functions,
                           const LinearSystem& system,
                           const std::vector<int>& subset = {},
                           bool reparametrized = true);

// Same average for f_i = omega^{pi_i}, counted exactly as a residue
// histogram.
CountReport phase_system_average(const std::vector<Polynomial>& phases,
                                 const LinearSystem& system,
                                 const std::vector<int>& subset = {},
                                 bool reparametrized = true);

// Density of x with L_i(x) in A_i for every i, as an exact rational, along
// with the product of the set densities and the deviation between them.
CountReport set_solution_density(const std::vector<TableFunction>& indicators,
                                 const LinearSystem& system,
                                 bool reparametrized = true);

// Exact |support| / p^n of an indicator table. Rejects non-0/1 tables.
Rational indicator_density(const TableFunction& indicator);

// A - delta * 1 with the exact rational density.
TableFunction balanced_part(const TableFunction& indicator);

}  // namespace fplab
