#include "fplab/system_analysis.hpp"

#include <algorithm>

#include "fplab/errors.hpp"
#include "fplab/limits.hpp"

namespace fplab {

std::vector<MultisetIndex> power_matrix_columns(int d, int s) {
  return multisets_of_size(d, s);
}

FpMatrix power_coefficient_matrix(const LinearSystem& system, int s) {
  if (s < 1) throw ContractError("power degree must be at least 1");
  if (s >= system.p()) {
    throw ContractError(
        "power degree must stay below the field characteristic");
  }
  const PrimeModulus mod(system.p());
  const auto columns = power_matrix_columns(system.d(), s);
  FpMatrix m(system.p(), system.m(), static_cast<int>(columns.size()));
  for (int i = 0; i < system.m(); ++i) {
    const auto& c = system.form(i).coeffs;
    for (int j = 0; j < m.cols(); ++j) {
      const auto& v = columns[static_cast<std::size_t>(j)];
      std::int64_t entry =
          static_cast<std::int64_t>(v.orderings() %
                                    static_cast<std::uint64_t>(system.p()));
      for (const int u : v.entries) {
        entry = (entry * c[static_cast<std::size_t>(u)]) % system.p();
      }
      m.set(i, j, entry);
    }
  }
  return m;
}

MatrixSummary matrix_rank_nullspace(const FpMatrix& m) {
  auto summary = eliminate(m);
  return MatrixSummary{summary.rank, std::move(summary.nullspace),
                       std::move(summary.row_relations)};
}

bool degree_independence(const LinearSystem& system, int s) {
  return eliminate(power_coefficient_matrix(system, s)).rank == system.m();
}

IndependenceScan minimal_independence_degree(const LinearSystem& system,
                                             int s_max) {
  IndependenceScan scan;
  const int cap = std::min(s_max, static_cast<int>(system.p()) - 1);
  scan.truncated = s_max > system.p() - 1;
  for (int s = 1; s <= cap; ++s) {
    if (degree_independence(system, s)) {
      scan.s_star = s;
      break;
    }
  }
  return scan;
}

namespace {

// L_i in span of the class members?
bool span_contains(std::int32_t p, const std::vector<const LinearForm*>& members,
                   const LinearForm& target) {
  if (members.empty()) return false;
  FpMatrix m(p, target.d(), static_cast<int>(members.size()));
  for (int j = 0; j < m.cols(); ++j) {
    const auto& f = *members[static_cast<std::size_t>(j)];
    for (int r = 0; r < m.rows(); ++r) {
      m.set(r, j, f.coeffs[static_cast<std::size_t>(r)]);
    }
  }
  return solve(m, target.coeffs).has_value();
}

bool assign(std::int32_t p, const std::vector<const LinearForm*>& others,
            const LinearForm& target, int classes,
            std::vector<std::vector<const LinearForm*>>& partition,
            std::size_t next, int used) {
  if (next == others.size()) return true;
  // Restricted-growth assignment kills the class-relabeling symmetry.
  const int limit = std::min(classes, used + 1);
  for (int c = 0; c < limit; ++c) {
    auto& cls = partition[static_cast<std::size_t>(c)];
    cls.push_back(others[next]);
    const bool ok = !span_contains(p, cls, target) &&
                    assign(p, others, target, classes, partition, next + 1,
                           std::max(used, c + 1));
    cls.pop_back();
    if (ok) return true;
  }
  return false;
}

// Fewest span-avoiding classes for the forms other than i; absent when even
// singletons fail (the target is zero or duplicated).
std::optional<int> min_classes(const LinearSystem& system, int i) {
  const auto& target = system.form(i);
  std::vector<const LinearForm*> others;
  for (int j = 0; j < system.m(); ++j) {
    if (j != i) others.push_back(&system.form(j));
  }
  if (others.empty()) return 0;
  if (target.is_zero()) return std::nullopt;
  for (const auto* f : others) {
    if (span_contains(system.p(), {f}, target)) return std::nullopt;
  }
  for (int classes = 1; classes <= static_cast<int>(others.size()); ++classes) {
    std::vector<std::vector<const LinearForm*>> partition(
        static_cast<std::size_t>(classes));
    if (assign(system.p(), others, target, classes, partition, 0, 0)) {
      return classes;
    }
  }
  return std::nullopt;
}

}  // namespace

CsComplexityResult cs_complexity(const LinearSystem& system, int max_forms) {
  if (system.m() > max_forms) {
    std::uint64_t estimated = 1;
    for (int j = 1; j < system.m(); ++j) {
      estimated *= static_cast<std::uint64_t>(system.m());
    }
    throw BudgetError(estimated, limits().point_budget);
  }
  CsComplexityResult result;
  int worst = 0;
  for (int i = 0; i < system.m(); ++i) {
    const auto classes = min_classes(system, i);
    if (!classes) {
      result.degenerate = true;
      return result;
    }
    worst = std::max(worst, *classes);
  }
  result.value = std::max(0, worst - 1);
  return result;
}

SystemAnalysis analyze_system(const LinearSystem& system, int s_max) {
  SystemAnalysis report;
  report.p = system.p();
  report.d = system.d();
  report.m = system.m();
  report.degenerate = system.degenerate();
  report.degeneracy_notes = system.degeneracy_notes();

  const int cap = std::min(s_max, static_cast<int>(system.p()) - 1);
  report.truncated = s_max > system.p() - 1;
  for (int s = 1; s <= cap; ++s) {
    const FpMatrix m = power_coefficient_matrix(system, s);
    auto summary = eliminate(m);
    IndependenceVerdict verdict;
    verdict.s = s;
    verdict.rank = summary.rank;
    verdict.independent = summary.rank == system.m();
    verdict.row_relations = std::move(summary.row_relations);
    for (int i = 0; i < system.m(); ++i) {
      verdict.row_independent.push_back(
          row_independence_certificate(m, i).independent);
    }
    if (verdict.independent && !report.s_star) report.s_star = s;
    report.verdicts.push_back(std::move(verdict));
  }
  if (report.s_star) report.predicted_true_complexity = *report.s_star - 1;
  report.cs = cs_complexity(system);
  return report;
}

}  // namespace fplab
