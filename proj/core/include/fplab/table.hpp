#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fplab/field.hpp"

namespace fplab {

// Dense complex-valued function on the n-dimensional space over F_p, stored in
// point-index order. Value semantics throughout; domains are small enough that
// copying is never the bottleneck.
class TableFunction {
 public:
  TableFunction(std::int32_t p, int n);
  TableFunction(std::int32_t p, int n, std::vector<std::complex<double>> values);
  static TableFunction constant(std::int32_t p, int n,
                                std::complex<double> value);

  std::int32_t p() const { return p_; }
  int n() const { return n_; }
  std::uint64_t size() const { return values_.size(); }
  const std::vector<std::complex<double>>& values() const { return values_; }
  std::vector<std::complex<double>>& values() { return values_; }

  std::complex<double> operator[](std::uint64_t index) const {
    return values_[static_cast<std::size_t>(index)];
  }
  std::complex<double>& operator[](std::uint64_t index) {
    return values_[static_cast<std::size_t>(index)];
  }
  std::complex<double> at(const Point& x) const;

  TableFunction shifted(const Point& h) const;  // x -> f(x + h)
  TableFunction conjugated() const;
  TableFunction times(const TableFunction& g) const;  // pointwise product
  TableFunction plus(const TableFunction& g) const;
  TableFunction minus(const TableFunction& g) const;
  TableFunction scaled(std::complex<double> c) const;

  std::complex<double> mean() const;
  // E_x f(x) * conj(g(x))
  std::complex<double> inner_product(const TableFunction& g) const;
  double l2_norm() const;             // sqrt(E |f|^2)
  double lq_mean(double q) const;     // (E |f|^q)^(1/q)
  double max_abs() const;
  bool all_finite() const;

 private:
  void check_compatible(const TableFunction& g) const;

  std::int32_t p_;
  int n_;
  std::vector<std::complex<double>> values_;
};

// Numerically stable pairwise summation.
std::complex<double> pairwise_sum(const std::complex<double>* data,
                                  std::size_t count);

}  // namespace fplab
