#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fplab/polynomial.hpp"
#include "fplab/table.hpp"

namespace fplab {

struct PhaseTerm {
  double lambda = 0.0;
  Polynomial pi;
  // -log_p of the kernel density of the derived form; +infinity for nonzero
  // linear phases. Filled by rank_all when absent.
  std::optional<double> rank;
};

// f' = sum_j lambda_j omega^{pi_j} with real coefficients.
class PhaseCombination {
 public:
  PhaseCombination(std::int32_t p, int n) : p_(p), n_(n) {}

  std::int32_t p() const { return p_; }
  int n() const { return n_; }
  const std::vector<PhaseTerm>& terms() const { return terms_; }
  std::vector<PhaseTerm>& terms() { return terms_; }
  void add_term(double lambda, Polynomial pi);

  double weight() const;  // M = sum |lambda_j|
  int degree() const;     // max term degree, 1 when empty
  void rank_all();        // computes every missing rank

  TableFunction materialize() const;  // cost p^n per term, charged

 private:
  std::int32_t p_;
  int n_;
  std::vector<PhaseTerm> terms_;
};

// f = structured + g + h with the declared bound parameters: every term
// degree in [s, k], term ranks >= R, |g|_{U^{k+1}} <= eta, |h|_2 <= epsilon.
struct Decomposition {
  TableFunction f;
  PhaseCombination structured;
  TableFunction g;
  TableFunction h;
  int s = 1;
  int k = 1;
  double epsilon = 0.0;
  double eta = 0.0;
  double R = 0.0;
  std::optional<double> declared_weight;  // M_0 cap when stated
};

struct ProofBound {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct FilterReport {
  Decomposition filtered;  // high-rank terms only; h'' absorbs the rest
  int t = 0;               // gap length in rank units
  double r1 = 0.0;         // chosen window start
  double window_weight = 0.0;
  double low_weight = 0.0;   // sum |lambda| over ranks < r1
  double kept_weight = 0.0;  // sum |lambda| over ranks >= r1 + t
  double low_l2 = 0.0;       // |f_L|_2
  double h_out_l2 = 0.0;     // |h''|_2
  double f_unorm = 0.0;      // |f|_{U^m}, m the combination degree
  double eta = 0.0;          // measured |g|_{U^{m+1}}
  // realized = |f|_{U^m} * M * p^{r1}; the 5 epsilon guarantee applies when
  // realized <= epsilon^2, and is reported rather than assumed.
  double realized = 0.0;
  bool precondition_met = false;
  bool h_out_within_5eps = false;
  std::vector<ProofBound> bounds;
  std::vector<double> ranks;  // per input term
};

// Splits the combination at a low-weight rank window. Follows a fixed
// recipe: t = ceil(2 log_p(M/epsilon)), first window start r1 in
// {R, R+t, R+2t, ...} whose weight is at most epsilon, terms below r1 and
// inside the window fold into h'' = h + f_mid + f_low. Preconditions
// (reconstruction within 1e-9, weight <= M, |g|_{U^{m+1}} <= epsilon^2/M,
// |h|_2 <= epsilon) are checked and named on violation.
FilterReport rank_gap_filter(const TableFunction& f,
                             const PhaseCombination& combination,
                             const TableFunction& g, const TableFunction& h,
                             double epsilon, double M, double R);

struct VerifyClause {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct VerifyDecompositionReport {
  std::vector<VerifyClause> clauses;
  bool all_pass = true;
};

// Checks every recorded bound of the decomposition and reports pass/fail per
// clause; never throws on a failed bound.
VerifyDecompositionReport verify_decomposition(const Decomposition& dec);

// JSON bundle {terms: [{lambda, polynomial_text, rank}], g_ref, h_ref,
// params: {s, k, epsilon, eta, R}} with optional f_ref and m0; table parts
// live in sibling binary files. Relative refs resolve against the JSON file.
Decomposition load_decomposition(const std::string& json_path, std::int32_t p,
                                 int n);
void save_decomposition(const Decomposition& dec, const std::string& json_path,
                        const std::string& table_prefix);

}  // namespace fplab
