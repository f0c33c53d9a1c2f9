#include "fplab/field.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fplab/errors.hpp"

namespace fplab {
namespace {

bool is_prime(std::int32_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

PrimeModulus::PrimeModulus(std::int32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw ContractError("modulus " + std::to_string(p) + " is not prime");
  }
}

std::int32_t PrimeModulus::pow(std::int32_t a, std::uint64_t e) const {
  std::int64_t base = a % p_;
  if (base < 0) base += p_;
  std::int64_t result = 1;
  while (e > 0) {
    if (e & 1u) result = (result * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return static_cast<std::int32_t>(result);
}

std::int32_t PrimeModulus::inv(std::int32_t a) const {
  if (reduce(a) == 0) throw ContractError("no inverse of zero");
  return pow(a, static_cast<std::uint64_t>(p_ - 2));
}

Point PrimeModulus::add(const Point& a, const Point& b) const {
  if (a.size() != b.size()) throw ContractError("point dimension mismatch");
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = add(a[i], b[i]);
  return out;
}

Point PrimeModulus::sub(const Point& a, const Point& b) const {
  if (a.size() != b.size()) throw ContractError("point dimension mismatch");
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sub(a[i], b[i]);
  return out;
}

Point PrimeModulus::scale(std::int32_t c, const Point& a) const {
  Point out(a.size());
  const std::int32_t cr = reduce(c);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(cr, a[i]);
  return out;
}

std::uint64_t domain_size(std::int32_t p, int n) {
  if (n < 0) throw ContractError("negative dimension");
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > UINT64_MAX / static_cast<std::uint64_t>(p)) {
      throw ContractError("domain size overflows 64 bits");
    }
    size *= static_cast<std::uint64_t>(p);
  }
  return size;
}

std::uint64_t encode_point(std::int32_t p, const Point& x) {
  std::uint64_t index = 0;
  for (const std::int32_t c : x) {
    index = index * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(c);
  }
  return index;
}

Point decode_point(std::int32_t p, std::uint64_t index, int n) {
  Point x(static_cast<std::size_t>(n));
  for (int i = n; i-- > 0;) {
    x[i] = static_cast<std::int32_t>(index % static_cast<std::uint64_t>(p));
    index /= static_cast<std::uint64_t>(p);
  }
  return x;
}

std::uint64_t shift_index(std::int32_t p, std::uint64_t index,
                          std::uint64_t h_index, int n) {
  const auto up = static_cast<std::uint64_t>(p);
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t a = index % up;
    const std::uint64_t b = h_index % up;
    std::uint64_t s = a + b;
    if (s >= up) s -= up;
    out += s * place;
    index /= up;
    h_index /= up;
    place *= up;
  }
  return out;
}

RootTable::RootTable(std::int32_t p) {
  PrimeModulus check(p);
  roots_.resize(static_cast<std::size_t>(p));
  for (std::int32_t j = 0; j < p; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / p;
    roots_[j] = std::complex<double>(std::cos(angle), std::sin(angle));
  }
}

}  // namespace fplab
