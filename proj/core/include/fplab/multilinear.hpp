#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fplab/polynomial.hpp"
#include "fplab/rational.hpp"
#include "fplab/residue.hpp"

namespace fplab {

// Nondecreasing multiset of slot indices in [0, d): the index of a monomial
// in block variables.
struct MultisetIndex {
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }
  int multiplicity(int i) const;
  std::vector<int> distinct() const;
  MultisetIndex remove_one(int i) const;
  // Number of distinct orderings: size! / prod(multiplicity!).
  std::uint64_t orderings() const;

  bool operator==(const MultisetIndex& o) const { return entries == o.entries; }
  bool operator<(const MultisetIndex& o) const { return entries < o.entries; }
};

// All size-s multisets over [0, d) in lexicographic order.
std::vector<MultisetIndex> multisets_of_size(int d, int s);

// Symmetric d-linear form on the n-dimensional space over F_p, stored as a
// symmetric coefficient tensor: sorted coordinate multiset -> coefficient.
// When derived from a polynomial the source is kept so the alternating-sum
// evaluation stays available for cross-checks.
class MultilinearForm {
 public:
  MultilinearForm(std::int32_t p, int n, int d);

  // The form h -> sum_{eps in {0,1}^d} (-1)^{d-|eps|} pi(eps.h) of a
  // polynomial with deg(pi) <= d. Lower-order terms cancel in the sum.
  static MultilinearForm derived_from(const Polynomial& pi, int d);

  // The unique symmetric s-linear form whose diagonal is the degree-s
  // homogeneous polynomial pi: the derived form divided by s!. Requires p > s.
  static MultilinearForm canonical_monomial_form(const Polynomial& pi, int s);

  std::int32_t p() const { return p_; }
  int n() const { return n_; }
  int d() const { return d_; }
  bool is_zero() const { return tensor_.empty(); }

  const std::map<std::vector<std::int32_t>, std::int32_t>& tensor() const {
    return tensor_;
  }
  // coords must be sorted nondecreasing, length d, entries in [0, n).
  void set_entry(std::vector<std::int32_t> coords, std::int32_t coeff);

  std::int32_t eval(const std::vector<Point>& args) const;
  // Alternating-sum evaluation from the source polynomial around an arbitrary
  // base point; requires a source (forms built via derived_from).
  std::int32_t eval_from_source(const std::vector<Point>& args,
                                const Point& base) const;
  bool has_source() const { return source_.has_value(); }
  const Polynomial& source() const;

  MultilinearForm bind_last(const Point& y) const;  // d must be >= 2
  MultilinearForm plus(const MultilinearForm& o) const;
  MultilinearForm scaled(std::int32_t c) const;

  // kappa(x, ..., x) as a polynomial in n variables.
  Polynomial diagonal() const;

 private:
  std::int32_t p_;
  int n_;
  int d_;
  std::map<std::vector<std::int32_t>, std::int32_t> tensor_;
  std::optional<Polynomial> source_;
};

// Exact rank data: alpha = kernel_count / domain_size = p^{-rank}.
struct RankValue {
  std::int32_t p;
  std::uint64_t kernel_count;
  std::uint64_t domain_size;  // p^{n(d-1)}
  bool is_exact = true;

  Rational alpha() const {
    return Rational(static_cast<std::int64_t>(kernel_count), domain_size);
  }
  bool rank_infinite() const { return kernel_count == 0; }
  double rank() const;  // -log_p(alpha); +infinity when the kernel is empty
};

// Counts (h_2,...,h_d) for which the first slot map is identically zero,
// testing the n basis directions. Cost n * p^{n(d-1)} points, charged.
// For d = 1 the convention is: kernel 1 for the zero form, else 0.
RankValue analytic_rank(const MultilinearForm& kappa);

// Independent backend: exact histogram of kappa over all p^{nd} argument
// tuples; the mean of omega^kappa recovers alpha. Cost p^{nd}, charged.
ResidueCounter value_census(const MultilinearForm& kappa);

// Rank of the restriction kappa(...,y) for every y, plus the exact identity
// sum_y kernel_count(y) == kernel_count(kappa).
struct RestrictionProfile {
  std::vector<RankValue> per_y;  // indexed by the point index of y
  RankValue whole;
};
RestrictionProfile restricted_rank_profile(const MultilinearForm& kappa);

// One monomial in block variables x_1..x_d over F_p^n: coeff * kappa(x_V)
// with any trailing slots already bound to fixed points.
struct BlockMonomial {
  MultisetIndex index;       // slots in [0, d)
  MultilinearForm form;      // |index|-linear after binding
  std::int32_t coeff = 1;

  std::int32_t eval(const std::vector<Point>& x) const;
};

// Sum of block monomials; the shape of a partial derivative of a monomial.
struct BlockPolynomial {
  std::vector<BlockMonomial> terms;

  std::int32_t eval(const std::vector<Point>& x) const;
};

// Difference mu_V(x) - mu_V(x - y e_i) expanded by multilinearity. The first
// returned term is the leading monomial with index V \ {i} (multiplicity
// factor times the form with y bound), when i occurs in V; absent i gives an
// empty polynomial.
BlockPolynomial monomial_partial_derivative(const MultilinearForm& kappa_v,
                                            const MultisetIndex& V,
                                            const Point& y, int i);

}  // namespace fplab
