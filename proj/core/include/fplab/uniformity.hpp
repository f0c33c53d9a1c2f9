#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "fplab/polynomial.hpp"
#include "fplab/rational.hpp"
#include "fplab/residue.hpp"
#include "fplab/table.hpp"

namespace fplab {

struct UniformityReport {
  int k = 1;
  double value = 0.0;  // the norm itself
  std::optional<Rational> exact_power;  // exact 2^k-th power (phase inputs)
  std::uint64_t cost = 0;  // points enumerated
};

// (D_h f)(x) = f(x+h) * conj(f(x)).
TableFunction multiplicative_derivative(const TableFunction& f, const Point& h);

// Recursive box-norm power: P_1 = |E f|^2, P_k = E_h P_{k-1}(D_h f).
// Cost about 2 p^{nk} kernel operations, charged.
double unorm_power(const TableFunction& f, int k);
UniformityReport gowers_norm(const TableFunction& f, int k);

// Exact 2^k-th power of the norm of omega^pi by derivative recursion over
// k-1 difference variables; the count of tuples whose iterated difference is
// constant, over p^{n(k-1)}. Requires k >= deg(pi).
Rational exact_phase_unorm_power(const Polynomial& pi, int k);

// Exact histogram of the k-fold iterated difference of pi over all
// p^{n(k+1)} tuples (x, h_1..h_k); the mean of omega over it is the norm
// power. Any k >= 1; cost p^{n(k+1)}, charged.
ResidueCounter phase_unorm_census(const Polynomial& pi, int k);

// E_{x,h_1..h_K} prod_{eps} C^{|eps|} f_eps(x + eps.h) where K = log2(count)
// and eps runs over {0,1}^K. Requires a power-of-two function count.
std::complex<double> gowers_inner_product(
    const std::vector<TableFunction>& functions);

// E_x f(x) omega^{-pi(x)}: correlation with the phase, so that
// correlation(omega^pi, pi) = 1.
std::complex<double> correlation(const TableFunction& f, const Polynomial& pi);

// The dual averaging operator applied to omega^pi with d = max(deg pi, 1):
// x -> E_{y in (F_p^n)^d} prod_{eps != 0} C^{|eps|} omega^{pi(x + eps.y)},
// eps over {0,1}^d, C^{|eps|} conjugating on odd weight. For the diagonal of
// a d-linear form of finite rank r this equals p^{-r} omega^{-pi} pointwise.
// Cost p^{n(d+1)} tuples, charged.
TableFunction dual_operator(const Polynomial& pi);

struct InverseSearchResult {
  Polynomial best;
  std::complex<double> correlation;
  std::uint64_t candidates = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
};

// Maximizes |correlation(f, pi)| over polynomials of degree <= d, either
// exhaustively over all canonical polynomials or by seeded sampling.
InverseSearchResult inverse_search_exhaustive(const TableFunction& f, int d);
InverseSearchResult inverse_search_sampled(const TableFunction& f, int d,
                                           std::uint64_t samples,
                                           std::uint64_t seed);

}  // namespace fplab
