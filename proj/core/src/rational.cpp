#include "fplab/rational.hpp"

#include <algorithm>
#include <numeric>

#include "fplab/errors.hpp"

namespace fplab {
namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < -i128(INT64_MAX)) {
    throw ContractError("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

std::uint64_t checked_narrow_u(unsigned __int128 v) {
  if (v > UINT64_MAX) throw ContractError("rational arithmetic overflow");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::uint64_t den) : num_(num), den_(den) {
  if (den == 0) throw ContractError("rational with zero denominator");
  normalize();
}

Rational Rational::inverse_power(std::int64_t p, unsigned e) {
  if (p <= 0) throw ContractError("inverse_power requires a positive base");
  unsigned __int128 d = 1;
  for (unsigned i = 0; i < e; ++i) {
    d *= static_cast<unsigned __int128>(p);
    if (d > UINT64_MAX) throw ContractError("inverse_power overflow");
  }
  return Rational(1, static_cast<std::uint64_t>(d));
}

void Rational::normalize() {
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  const std::uint64_t a = num_ < 0 ? static_cast<std::uint64_t>(-(num_ + 1)) + 1
                                   : static_cast<std::uint64_t>(num_);
  const std::uint64_t g = std::gcd(a, den_);
  num_ /= static_cast<std::int64_t>(g);
  den_ /= g;
}

Rational Rational::operator+(const Rational& o) const {
  const std::uint64_t g = std::gcd(den_, o.den_);
  const std::uint64_t l = den_ / g;
  const std::uint64_t r = o.den_ / g;
  const i128 num = i128(num_) * i128(r) + i128(o.num_) * i128(l);
  const unsigned __int128 den =
      static_cast<unsigned __int128>(den_) * static_cast<unsigned __int128>(r);
  return Rational(checked_narrow(num), checked_narrow_u(den));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::operator*(const Rational& o) const {
  // Cross-cancel first so products of already reduced values stay narrow.
  Rational a(num_, o.den_);
  Rational b(o.num_, den_);
  const i128 num = i128(a.num_) * i128(b.num_);
  const unsigned __int128 den = static_cast<unsigned __int128>(a.den_) *
                                static_cast<unsigned __int128>(b.den_);
  return Rational(checked_narrow(num), checked_narrow_u(den));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw ContractError("rational division by zero");
  const bool neg = o.num_ < 0;
  const std::uint64_t on = neg ? static_cast<std::uint64_t>(-(o.num_ + 1)) + 1
                               : static_cast<std::uint64_t>(o.num_);
  const i128 num = i128(num_) * i128(o.den_) * (neg ? -1 : 1);
  const unsigned __int128 den =
      static_cast<unsigned __int128>(den_) * static_cast<unsigned __int128>(on);
  return Rational(checked_narrow(num), checked_narrow_u(den));
}

bool Rational::operator<(const Rational& o) const {
  return i128(num_) * i128(o.den_) < i128(o.num_) * i128(den_);
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

BigUint::BigUint(std::uint64_t v) {
  if (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::operator*(const BigUint& o) const {
  if (is_zero() || o.is_zero()) return BigUint();
  BigUint out;
  out.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      const std::uint64_t cur = std::uint64_t(limbs_[i]) * o.limbs_[j] +
                                out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    out.limbs_[i + o.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  out.trim();
  return out;
}

BigUint BigUint::pow(unsigned e) const {
  BigUint result(1);
  BigUint base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

int BigUint::compare(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size()) {
    return limbs_.size() < o.limbs_.size() ? -1 : 1;
  }
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  // Repeated division by 10^9; sizes here are tiny so the quadratic cost is fine.
  std::vector<std::uint32_t> work(limbs_);
  std::string out;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(rem);
    if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
    out.insert(0, chunk);
  }
  return out;
}

}  // namespace fplab
