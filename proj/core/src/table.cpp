#include "fplab/table.hpp"

#include <cmath>

#include "fplab/errors.hpp"

namespace fplab {

TableFunction::TableFunction(std::int32_t p, int n)
    : p_(p), n_(n), values_(domain_size(p, n), std::complex<double>(0.0)) {
  PrimeModulus check(p);
}

TableFunction::TableFunction(std::int32_t p, int n,
                             std::vector<std::complex<double>> values)
    : p_(p), n_(n), values_(std::move(values)) {
  PrimeModulus check(p);
  if (values_.size() != domain_size(p, n)) {
    throw ContractError("table length does not match domain size");
  }
}

TableFunction TableFunction::constant(std::int32_t p, int n,
                                      std::complex<double> value) {
  TableFunction f(p, n);
  for (auto& v : f.values_) v = value;
  return f;
}

std::complex<double> TableFunction::at(const Point& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw ContractError("point dimension does not match table");
  }
  return values_[static_cast<std::size_t>(encode_point(p_, x))];
}

TableFunction TableFunction::shifted(const Point& h) const {
  if (static_cast<int>(h.size()) != n_) {
    throw ContractError("shift dimension does not match table");
  }
  const std::uint64_t hi = encode_point(p_, h);
  TableFunction out(p_, n_);
  for (std::uint64_t x = 0; x < size(); ++x) {
    out.values_[static_cast<std::size_t>(x)] =
        values_[static_cast<std::size_t>(shift_index(p_, x, hi, n_))];
  }
  return out;
}

TableFunction TableFunction::conjugated() const {
  TableFunction out = *this;
  for (auto& v : out.values_) v = std::conj(v);
  return out;
}

void TableFunction::check_compatible(const TableFunction& g) const {
  if (g.p_ != p_ || g.n_ != n_) {
    throw ContractError("table domain mismatch");
  }
}

TableFunction TableFunction::times(const TableFunction& g) const {
  check_compatible(g);
  TableFunction out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] *= g.values_[i];
  return out;
}

TableFunction TableFunction::plus(const TableFunction& g) const {
  check_compatible(g);
  TableFunction out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] += g.values_[i];
  return out;
}

TableFunction TableFunction::minus(const TableFunction& g) const {
  check_compatible(g);
  TableFunction out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] -= g.values_[i];
  return out;
}

TableFunction TableFunction::scaled(std::complex<double> c) const {
  TableFunction out = *this;
  for (auto& v : out.values_) v *= c;
  return out;
}

std::complex<double> pairwise_sum(const std::complex<double>* data,
                                  std::size_t count) {
  if (count <= 64) {
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) sum += data[i];
    return sum;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

std::complex<double> TableFunction::mean() const {
  return pairwise_sum(values_.data(), values_.size()) /
         static_cast<double>(values_.size());
}

std::complex<double> TableFunction::inner_product(const TableFunction& g) const {
  check_compatible(g);
  std::vector<std::complex<double>> prod(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    prod[i] = values_[i] * std::conj(g.values_[i]);
  }
  return pairwise_sum(prod.data(), prod.size()) /
         static_cast<double>(prod.size());
}

double TableFunction::l2_norm() const {
  double sum = 0.0;
  for (const auto& v : values_) sum += std::norm(v);
  return std::sqrt(sum / static_cast<double>(values_.size()));
}

double TableFunction::lq_mean(double q) const {
  if (q <= 0.0) throw ContractError("lq_mean requires q > 0");
  double sum = 0.0;
  for (const auto& v : values_) sum += std::pow(std::abs(v), q);
  return std::pow(sum / static_cast<double>(values_.size()), 1.0 / q);
}

double TableFunction::max_abs() const {
  double best = 0.0;
  for (const auto& v : values_) best = std::max(best, std::abs(v));
  return best;
}

bool TableFunction::all_finite() const {
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

}  // namespace fplab
