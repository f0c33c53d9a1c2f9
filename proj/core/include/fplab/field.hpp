#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace fplab {

// A point of the n-dimensional space over the prime field, coordinates in [0,p).
using Point = std::vector<std::int32_t>;

// Arithmetic modulo a validated prime p. Residues are canonical in [0,p).
class PrimeModulus {
 public:
  explicit PrimeModulus(std::int32_t p);

  std::int32_t p() const { return p_; }

  std::int32_t reduce(std::int64_t v) const {
    const std::int64_t r = v % p_;
    return static_cast<std::int32_t>(r < 0 ? r + p_ : r);
  }
  std::int32_t add(std::int32_t a, std::int32_t b) const {
    const std::int32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::int32_t sub(std::int32_t a, std::int32_t b) const {
    const std::int32_t s = a - b;
    return s < 0 ? s + p_ : s;
  }
  std::int32_t neg(std::int32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::int32_t mul(std::int32_t a, std::int32_t b) const {
    return static_cast<std::int32_t>((std::int64_t(a) * b) % p_);
  }
  std::int32_t pow(std::int32_t a, std::uint64_t e) const;
  std::int32_t inv(std::int32_t a) const;  // a must be nonzero

  Point add(const Point& a, const Point& b) const;
  Point sub(const Point& a, const Point& b) const;
  Point scale(std::int32_t c, const Point& a) const;

 private:
  std::int32_t p_;
};

// p^n, guarded against 64-bit overflow.
std::uint64_t domain_size(std::int32_t p, int n);

// Row-major base-p index of a point; coordinate 0 is the most significant digit.
std::uint64_t encode_point(std::int32_t p, const Point& x);
Point decode_point(std::int32_t p, std::uint64_t index, int n);

// Index of x + h without materializing the points.
std::uint64_t shift_index(std::int32_t p, std::uint64_t index,
                          std::uint64_t h_index, int n);

// The p complex p-th roots of unity, indexed by residue.
class RootTable {
 public:
  explicit RootTable(std::int32_t p);
  std::complex<double> operator[](std::int32_t residue) const {
    return roots_[residue];
  }
  std::int32_t p() const { return static_cast<std::int32_t>(roots_.size()); }

 private:
  std::vector<std::complex<double>> roots_;
};

}  // namespace fplab
