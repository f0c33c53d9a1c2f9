#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fplab/fp_matrix.hpp"
#include "fplab/linear_system.hpp"
#include "fplab/multilinear.hpp"

namespace fplab {

// Matrix with rows indexed by the forms and columns by the size-s multisets
// of [d] in lexicographic order; entry (i, V) is the coefficient of the
// monomial x_V in L_i^s, i.e. the multinomial of V times prod_{u in V} c_iu.
// Requires 1 <= s < p so the multinomials are nonzero mod p.
FpMatrix power_coefficient_matrix(const LinearSystem& system, int s);

// The multiset column order used above.
std::vector<MultisetIndex> power_matrix_columns(int d, int s);

struct MatrixSummary {
  int rank = 0;
  std::vector<std::vector<std::int32_t>> nullspace;      // M v = 0
  std::vector<std::vector<std::int32_t>> row_relations;  // lambda^T M = 0
};

MatrixSummary matrix_rank_nullspace(const FpMatrix& m);

// The system is degree-s independent when the s-th powers of its forms are
// linearly independent, i.e. the power matrix has full row rank.
bool degree_independence(const LinearSystem& system, int s);

// Least s <= s_max with degree-s independence; absent when none. The scan is
// capped at p - 1; `truncated` is set when s_max reached into that cap.
struct IndependenceScan {
  std::optional<int> s_star;
  bool truncated = false;
};
IndependenceScan minimal_independence_degree(const LinearSystem& system,
                                             int s_max);

// Smallest k such that for every i the other forms split into at most k + 1
// classes with no class span containing L_i. Exhaustive search over class
// assignments, capped at `max_forms` forms. Degenerate systems (a zero form,
// or L_i inside every possible split, e.g. a duplicated form) have no finite
// value: absent result with `degenerate` set.
struct CsComplexityResult {
  std::optional<int> value;
  bool degenerate = false;
};
CsComplexityResult cs_complexity(const LinearSystem& system, int max_forms = 8);

struct IndependenceVerdict {
  int s = 0;
  bool independent = false;
  int rank = 0;
  // Dependencies among the s-th powers: coefficients over the forms with
  // sum_j lambda_j L_j^s = 0. These are what the constructions consume.
  std::vector<std::vector<std::int32_t>> row_relations;
  // Per form: is L_i^s outside the span of the other s-th powers.
  std::vector<bool> row_independent;
};

struct SystemAnalysis {
  std::int32_t p = 0;
  int d = 0;
  int m = 0;
  std::vector<IndependenceVerdict> verdicts;  // s = 1, 2, ...
  std::optional<int> s_star;
  std::optional<int> predicted_true_complexity;  // s_star - 1
  CsComplexityResult cs;
  bool degenerate = false;
  std::vector<std::string> degeneracy_notes;
  bool truncated = false;  // scan stopped at p - 1 below s_max
};

SystemAnalysis analyze_system(const LinearSystem& system, int s_max);

}  // namespace fplab
