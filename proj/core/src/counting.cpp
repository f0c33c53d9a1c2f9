#include "fplab/counting.hpp"

#include <cmath>

#include "fplab/errors.hpp"
#include "fplab/limits.hpp"

namespace fplab {

namespace {

std::vector<int> resolve_subset(const LinearSystem& system,
                                const std::vector<int>& subset) {
  std::vector<int> rows = subset;
  if (rows.empty()) {
    for (int i = 0; i < system.m(); ++i) rows.push_back(i);
  }
  for (const int i : rows) {
    if (i < 0 || i >= system.m()) throw ContractError("form index out of range");
  }
  return rows;
}

}  // namespace

Reparametrization reparametrize(const LinearSystem& system,
                                const std::vector<int>& subset) {
  const auto rows = resolve_subset(system, subset);
  const std::int32_t p = system.p();
  const int m = static_cast<int>(rows.size());
  const int d = system.d();

  // Column-by-column reduced basis with coefficient tracking. A new
  // independent column becomes a basis column and a unit column of `reduced`,
  // so `reduced` is echelon and of full row rank by construction.
  std::vector<std::vector<std::int32_t>> basis;           // columns, length m
  std::vector<std::vector<std::int32_t>> reduced_cols;    // length d
  for (int j = 0; j < d; ++j) {
    std::vector<std::int32_t> column(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      column[static_cast<std::size_t>(i)] =
          system.form(rows[static_cast<std::size_t>(i)])
              .coeffs[static_cast<std::size_t>(j)];
    }
    std::optional<std::vector<std::int32_t>> combo;
    if (!basis.empty()) {
      FpMatrix bm(p, m, static_cast<int>(basis.size()));
      for (int r = 0; r < m; ++r) {
        for (int k = 0; k < bm.cols(); ++k) {
          bm.set(r, k, basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)]);
        }
      }
      combo = solve(bm, column);
    }
    if (combo) {
      reduced_cols.push_back(std::move(*combo));
    } else {
      std::vector<std::int32_t> unit(basis.size() + 1, 0);
      unit.back() = 1;
      basis.push_back(std::move(column));
      reduced_cols.push_back(std::move(unit));
    }
  }

  const int rho = static_cast<int>(basis.size());
  Reparametrization rep{FpMatrix(p, m, rho), FpMatrix(p, rho, d), rho};
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < rho; ++k) {
      rep.mixing.set(i, k, basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
    }
  }
  for (int j = 0; j < d; ++j) {
    const auto& col = reduced_cols[static_cast<std::size_t>(j)];
    for (std::size_t k = 0; k < col.size(); ++k) {
      rep.reduced.set(static_cast<int>(k), j, col[k]);
    }
  }
  return rep;
}

namespace {

// Enumerates y over (F_p^n)^rho and hands the visitor the table index of
// mixing_row_i . y for every selected row, in tuple-index order.
template <typename Visit>
void for_each_argument_tuple(std::int32_t p, int n, const FpMatrix& mixing,
                             Visit&& visit) {
  const PrimeModulus mod(p);
  const int m = mixing.rows();
  const int rho = mixing.cols();
  const std::uint64_t points = domain_size(p, n);
  const std::uint64_t tuples = domain_size(p, n * rho);

  std::vector<Point> y(static_cast<std::size_t>(rho));
  std::vector<std::uint64_t> args(static_cast<std::size_t>(m));
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::uint64_t rest = t;
    for (int k = 0; k < rho; ++k) {
      y[static_cast<std::size_t>(k)] = decode_point(p, rest % points, n);
      rest /= points;
    }
    for (int i = 0; i < m; ++i) {
      std::uint64_t index = 0;
      for (int c = 0; c < n; ++c) {
        std::int64_t acc = 0;
        for (int k = 0; k < rho; ++k) {
          acc += std::int64_t(mixing.at(i, k)) *
                 y[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
        }
        index = index * static_cast<std::uint64_t>(p) +
                static_cast<std::uint64_t>(mod.reduce(acc));
      }
      args[static_cast<std::size_t>(i)] = index;
    }
    visit(args);
  }
}

FpMatrix full_mixing(const LinearSystem& system, const std::vector<int>& rows) {
  FpMatrix mixing(system.p(), static_cast<int>(rows.size()), system.d());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& coeffs = system.form(rows[i]).coeffs;
    for (int j = 0; j < system.d(); ++j) {
      mixing.set(static_cast<int>(i), j, coeffs[static_cast<std::size_t>(j)]);
    }
  }
  return mixing;
}

// Picks the enumeration matrix and stamps method and cost.
FpMatrix plan(const LinearSystem& system, const std::vector<int>& rows,
              bool reparametrized, int n, CountReport& report) {
  FpMatrix mixing = reparametrized ? reparametrize(system, rows).mixing
                                   : full_mixing(system, rows);
  report.method =
      mixing.cols() < system.d() ? "reparametrized" : "direct";
  report.cost = domain_size(system.p(), n * mixing.cols());
  charge(report.cost);
  return mixing;
}

}  // namespace

CountReport system_average(const std::vector<TableFunction>& functions,
                           const LinearSystem& system,
                           const std::vector<int>& subset,
                           bool reparametrized) {
  if (functions.size() != static_cast<std::size_t>(system.m())) {
    throw ContractError("need one function per form");
  }
  const std::int32_t p = system.p();
  const int n = functions.front().n();
  for (const auto& f : functions) {
    if (f.p() != p || f.n() != n) throw ContractError("table domain mismatch");
  }
  const auto rows = resolve_subset(system, subset);

  CountReport report;
  const FpMatrix mixing = plan(system, rows, reparametrized, n, report);

  std::complex<double> sum = 0.0;
  std::uint64_t tuples = 0;
  for_each_argument_tuple(p, n, mixing,
                          [&](const std::vector<std::uint64_t>& args) {
                            std::complex<double> prod = 1.0;
                            for (std::size_t i = 0; i < rows.size(); ++i) {
                              prod *= functions[static_cast<std::size_t>(
                                  rows[i])][args[i]];
                            }
                            sum += prod;
                            ++tuples;
                          });
  report.average = sum / static_cast<double>(tuples);
  return report;
}

CountReport phase_system_average(const std::vector<Polynomial>& phases,
                                 const LinearSystem& system,
                                 const std::vector<int>& subset,
                                 bool reparametrized) {
  if (phases.size() != static_cast<std::size_t>(system.m())) {
    throw ContractError("need one polynomial per form");
  }
  const std::int32_t p = system.p();
  const int n = phases.front().n();
  for (const auto& q : phases) {
    if (q.p() != p || q.n() != n) throw ContractError("domain mismatch");
  }
  const auto rows = resolve_subset(system, subset);

  CountReport report;
  const FpMatrix mixing = plan(system, rows, reparametrized, n, report);
  const PrimeModulus mod(p);

  // Residue tables once per selected phase; the loop just sums lookups.
  std::vector<std::vector<std::int32_t>> residues(rows.size());
  const std::uint64_t points = domain_size(p, n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& table = residues[i];
    table.resize(static_cast<std::size_t>(points));
    const auto& q = phases[static_cast<std::size_t>(rows[i])];
    for (std::uint64_t x = 0; x < points; ++x) {
      table[static_cast<std::size_t>(x)] = q.eval(decode_point(p, x, n));
    }
  }

  ResidueCounter counter(p);
  for_each_argument_tuple(p, n, mixing,
                          [&](const std::vector<std::uint64_t>& args) {
                            std::int32_t r = 0;
                            for (std::size_t i = 0; i < rows.size(); ++i) {
                              r = mod.add(r, residues[i][static_cast<std::size_t>(
                                                 args[i])]);
                            }
                            counter.add(r);
                          });
  RootTable roots(p);
  report.average = counter.mean(roots);
  report.exact_real_average = counter.exact_real_mean();
  report.residue_histogram = std::move(counter);
  return report;
}

CountReport set_solution_density(const std::vector<TableFunction>& indicators,
                                 const LinearSystem& system,
                                 bool reparametrized) {
  if (indicators.size() != static_cast<std::size_t>(system.m())) {
    throw ContractError("need one set per form");
  }
  const std::int32_t p = system.p();
  const int n = indicators.front().n();

  std::vector<std::vector<bool>> members;
  Rational expected(1, 1);
  for (const auto& a : indicators) {
    if (a.p() != p || a.n() != n) throw ContractError("table domain mismatch");
    expected = expected * indicator_density(a);
    std::vector<bool> in(static_cast<std::size_t>(a.size()));
    for (std::uint64_t x = 0; x < a.size(); ++x) {
      in[static_cast<std::size_t>(x)] = a[x].real() > 0.5;
    }
    members.push_back(std::move(in));
  }

  std::vector<int> rows;
  for (int i = 0; i < system.m(); ++i) rows.push_back(i);

  CountReport report;
  const FpMatrix mixing = plan(system, rows, reparametrized, n, report);

  std::uint64_t hits = 0;
  std::uint64_t tuples = 0;
  for_each_argument_tuple(p, n, mixing,
                          [&](const std::vector<std::uint64_t>& args) {
                            bool all = true;
                            for (std::size_t i = 0; i < args.size(); ++i) {
                              if (!members[i][static_cast<std::size_t>(args[i])]) {
                                all = false;
                                break;
                              }
                            }
                            hits += all ? 1 : 0;
                            ++tuples;
                          });
  report.density = Rational(static_cast<std::int64_t>(hits), tuples);
  report.expected_product = expected;
  report.deviation = *report.density - expected;
  report.average = report.density->to_double();
  report.exact_real_average = report.density;
  return report;
}

Rational indicator_density(const TableFunction& indicator) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < indicator.size(); ++x) {
    const auto v = indicator[x];
    if (std::abs(v.imag()) > 1e-12 ||
        (std::abs(v.real()) > 1e-12 && std::abs(v.real() - 1.0) > 1e-12)) {
      throw ContractError("table is not a 0/1 indicator");
    }
    count += v.real() > 0.5 ? 1 : 0;
  }
  return Rational(static_cast<std::int64_t>(count), indicator.size());
}

TableFunction balanced_part(const TableFunction& indicator) {
  const double delta = indicator_density(indicator).to_double();
  TableFunction out(indicator.p(), indicator.n());
  for (std::uint64_t x = 0; x < indicator.size(); ++x) {
    out[x] = indicator[x] - delta;
  }
  return out;
}

}  // namespace fplab
