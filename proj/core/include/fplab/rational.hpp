#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fplab {

// Exact signed rational. Numerators stay below 2^63 and denominators below
// 2^64 in every quantity this library produces (counts are bounded by the
// point budget); intermediate products are checked in 128-bit arithmetic.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::uint64_t den);
  static Rational integer(std::int64_t v) { return Rational(v, 1); }
  // p^-e as an exact rational; p^e must fit in 64 bits.
  static Rational inverse_power(std::int64_t p, unsigned e);

  std::int64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  double to_double() const;
  std::string to_string() const;  // "num/den", or "num" when den is 1

 private:
  void normalize();

  std::int64_t num_;
  std::uint64_t den_;
};

// Arbitrary-precision unsigned integer, just enough for exact comparison of
// products of large powers. Little-endian 32-bit limbs.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v);

  BigUint operator*(const BigUint& o) const;
  BigUint pow(unsigned e) const;

  // -1, 0, +1
  int compare(const BigUint& o) const;
  bool operator<(const BigUint& o) const { return compare(o) < 0; }
  bool operator==(const BigUint& o) const { return compare(o) == 0; }
  bool operator<=(const BigUint& o) const { return compare(o) <= 0; }

  bool is_zero() const { return limbs_.empty(); }
  std::string to_string() const;

 private:
  void trim();

  std::vector<std::uint32_t> limbs_;
};

}  // namespace fplab
