#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fplab/field.hpp"
#include "fplab/residue.hpp"

namespace fplab {

// Polynomial function on the n-dimensional space over F_p, kept in canonical
// form: per-variable exponents at most p-1 (x^p = x as a function), nonzero
// coefficients in [1, p). The exponent map is ordered, so printing and
// iteration are deterministic.
class Polynomial {
 public:
  Polynomial(std::int32_t p, int n);

  static Polynomial monomial(std::int32_t p, int n,
                             const std::vector<std::int32_t>& exponents,
                             std::int32_t coeff);
  static Polynomial constant(std::int32_t p, int n, std::int32_t value);

  std::int32_t p() const { return p_; }
  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; 0 for constants and for the zero polynomial.
  int degree() const;
  // Set when canonicalization lowered an exponent (x^p = x applied).
  bool reduction_applied() const { return reduced_; }

  const std::map<std::vector<std::int32_t>, std::int32_t>& terms() const {
    return terms_;
  }

  // Adds coeff * prod_i x_i^{exponents[i]} and recanonicalizes.
  void add_term(std::vector<std::int32_t> exponents, std::int64_t coeff);

  std::int32_t eval(const Point& x) const;

  Polynomial plus(const Polynomial& o) const;
  Polynomial minus(const Polynomial& o) const;
  Polynomial scaled(std::int32_t c) const;
  Polynomial times(const Polynomial& o) const;
  Polynomial pow(unsigned e) const;

  // x -> f(x + h) for a concrete shift h.
  Polynomial shifted(const Point& h) const;
  // x -> f(x + h) - f(x); drops the degree of the leading part.
  Polynomial delta(const Point& h) const;

  // Terms of total degree exactly s.
  Polynomial homogeneous_component(int s) const;

  // Substitutes x_i -> sum_j coeffs[j] * y_{j,i}, producing a polynomial in
  // blocks * n variables; the variable for coordinate i of block j has index
  // j * n + i.
  Polynomial compose_blocks(const std::vector<std::int32_t>& coeffs) const;

  // Exhaustive value histogram over the whole domain; cost p^n points.
  ResidueCounter value_distribution() const;

  // Canonical text form: terms in descending exponent order, e.g.
  // "x1^2 + 2*x2". Parses back to an equal polynomial.
  std::string to_string() const;

  bool operator==(const Polynomial& o) const {
    return p_ == o.p_ && n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  bool operator<(const Polynomial& o) const { return terms_ < o.terms_; }

 private:
  std::int32_t normalize_exponent(std::int32_t e);

  std::int32_t p_;
  int n_;
  std::map<std::vector<std::int32_t>, std::int32_t> terms_;
  bool reduced_ = false;
};

// Parses the grammar: terms joined by '+'/'-'; a term is an optional integer
// coefficient and '*'-separated factors 'x<idx>' with an optional '^<exp>'.
// Whitespace is ignored. Coefficients are reduced mod p.
Polynomial parse_polynomial(const std::string& text, std::int32_t p, int n);

}  // namespace fplab
