#include "fplab/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "fplab/errors.hpp"
#include "fplab/limits.hpp"

namespace fplab {

Polynomial::Polynomial(std::int32_t p, int n) : p_(p), n_(n) {
  PrimeModulus check(p);
  if (n < 0) throw ContractError("negative variable count");
}

Polynomial Polynomial::monomial(std::int32_t p, int n,
                                const std::vector<std::int32_t>& exponents,
                                std::int32_t coeff) {
  Polynomial out(p, n);
  std::vector<std::int32_t> e = exponents;
  e.resize(static_cast<std::size_t>(n), 0);
  out.add_term(std::move(e), coeff);
  return out;
}

Polynomial Polynomial::constant(std::int32_t p, int n, std::int32_t value) {
  return monomial(p, n, std::vector<std::int32_t>(static_cast<std::size_t>(n), 0),
                  value);
}

std::int32_t Polynomial::normalize_exponent(std::int32_t e) {
  if (e < 0) throw ContractError("negative exponent");
  if (e == 0 || e < p_) return e;
  reduced_ = true;
  return (e - 1) % (p_ - 1) + 1;
}

void Polynomial::add_term(std::vector<std::int32_t> exponents,
                          std::int64_t coeff) {
  if (static_cast<int>(exponents.size()) != n_) {
    throw ContractError("exponent vector length does not match variable count");
  }
  PrimeModulus mod(p_);
  const std::int32_t c = mod.reduce(coeff);
  if (c == 0) return;
  for (auto& e : exponents) e = normalize_exponent(e);
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exponents), c);
  } else {
    it->second = mod.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (const auto exp : e) total += exp;
    deg = std::max(deg, total);
  }
  return deg;
}

std::int32_t Polynomial::eval(const Point& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw ContractError("point dimension does not match polynomial");
  }
  PrimeModulus mod(p_);
  std::int32_t sum = 0;
  for (const auto& [e, c] : terms_) {
    std::int32_t term = c;
    for (int i = 0; i < n_; ++i) {
      if (e[static_cast<std::size_t>(i)] != 0) {
        term = mod.mul(term, mod.pow(x[static_cast<std::size_t>(i)],
                                     static_cast<std::uint64_t>(
                                         e[static_cast<std::size_t>(i)])));
      }
    }
    sum = mod.add(sum, term);
  }
  return sum;
}

Polynomial Polynomial::plus(const Polynomial& o) const {
  if (o.p_ != p_ || o.n_ != n_) throw ContractError("polynomial domain mismatch");
  Polynomial out = *this;
  out.reduced_ = reduced_ || o.reduced_;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::minus(const Polynomial& o) const {
  return plus(o.scaled(-1));
}

Polynomial Polynomial::scaled(std::int32_t c) const {
  PrimeModulus mod(p_);
  const std::int32_t cr = mod.reduce(c);
  Polynomial out(p_, n_);
  out.reduced_ = reduced_;
  if (cr == 0) return out;
  for (const auto& [e, coeff] : terms_) {
    out.terms_.emplace(e, mod.mul(coeff, cr));
  }
  return out;
}

Polynomial Polynomial::times(const Polynomial& o) const {
  if (o.p_ != p_ || o.n_ != n_) throw ContractError("polynomial domain mismatch");
  Polynomial out(p_, n_);
  out.reduced_ = reduced_ || o.reduced_;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<std::int32_t> e(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) {
        e[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] +
                                         eb[static_cast<std::size_t>(i)];
      }
      out.add_term(std::move(e), std::int64_t(ca) * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(p_, n_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result.times(base);
    base = base.times(base);
    e >>= 1;
  }
  return result;
}

Polynomial Polynomial::shifted(const Point& h) const {
  if (static_cast<int>(h.size()) != n_) {
    throw ContractError("shift dimension does not match polynomial");
  }
  PrimeModulus mod(p_);
  // Binomial coefficients up to the largest exponent; exponents are < p.
  std::vector<std::vector<std::int64_t>> choose(
      static_cast<std::size_t>(p_), std::vector<std::int64_t>(
                                        static_cast<std::size_t>(p_), 0));
  for (std::size_t a = 0; a < choose.size(); ++a) {
    choose[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) {
      choose[a][b] = choose[a - 1][b - 1] + (b <= a - 1 ? choose[a - 1][b] : 0);
    }
  }
  Polynomial out(p_, n_);
  out.reduced_ = reduced_;
  for (const auto& [e, c] : terms_) {
    // Expand prod_i (x_i + h_i)^{e_i}.
    std::vector<std::int32_t> k(static_cast<std::size_t>(n_), 0);
    for (;;) {
      std::int64_t coeff = c;
      for (int i = 0; i < n_; ++i) {
        const auto ei = static_cast<std::size_t>(e[static_cast<std::size_t>(i)]);
        const auto ki = static_cast<std::size_t>(k[static_cast<std::size_t>(i)]);
        coeff = (coeff * mod.reduce(choose[ei][ki])) % p_;
        coeff = (coeff * mod.pow(h[static_cast<std::size_t>(i)],
                                 static_cast<std::uint64_t>(ei - ki))) %
                p_;
      }
      out.add_term(k, coeff);
      // Odometer over 0 <= k_i <= e_i.
      int i = 0;
      while (i < n_ && k[static_cast<std::size_t>(i)] ==
                           e[static_cast<std::size_t>(i)]) {
        k[static_cast<std::size_t>(i)] = 0;
        ++i;
      }
      if (i == n_) break;
      ++k[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

Polynomial Polynomial::delta(const Point& h) const {
  return shifted(h).minus(*this);
}

Polynomial Polynomial::homogeneous_component(int s) const {
  Polynomial out(p_, n_);
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (const auto exp : e) total += exp;
    if (total == s) out.terms_.emplace(e, c);
  }
  return out;
}

Polynomial Polynomial::compose_blocks(
    const std::vector<std::int32_t>& coeffs) const {
  const int blocks = static_cast<int>(coeffs.size());
  if (blocks == 0) throw ContractError("empty substitution");
  const int out_vars = blocks * n_;
  PrimeModulus mod(p_);
  Polynomial out(p_, out_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(p_, out_vars, c);
    for (int i = 0; i < n_; ++i) {
      const std::int32_t ei = e[static_cast<std::size_t>(i)];
      if (ei == 0) continue;
      Polynomial linear(p_, out_vars);
      for (int j = 0; j < blocks; ++j) {
        std::vector<std::int32_t> le(static_cast<std::size_t>(out_vars), 0);
        le[static_cast<std::size_t>(j * n_ + i)] = 1;
        linear.add_term(std::move(le), mod.reduce(coeffs[static_cast<std::size_t>(j)]));
      }
      term = term.times(linear.pow(static_cast<unsigned>(ei)));
    }
    out = out.plus(term);
  }
  return out;
}

ResidueCounter Polynomial::value_distribution() const {
  const std::uint64_t size = domain_size(p_, n_);
  charge(size);
  ResidueCounter counter(p_);
  for (std::uint64_t i = 0; i < size; ++i) {
    counter.add(eval(decode_point(p_, i, n_)));
  }
  return counter;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending exponent order puts the leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    bool has_factor = false;
    std::string factors;
    for (int i = 0; i < n_; ++i) {
      const std::int32_t exp = e[static_cast<std::size_t>(i)];
      if (exp == 0) continue;
      if (has_factor) factors += "*";
      factors += "x" + std::to_string(i + 1);
      if (exp > 1) factors += "^" + std::to_string(exp);
      has_factor = true;
    }
    if (!has_factor) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += factors;
    } else {
      out += std::to_string(c) + "*" + factors;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::int32_t p, int n)
      : text_(text), p_(p), n_(n), poly_(p, n) {}

  Polynomial run() {
    skip_ws();
    if (pos_ == text_.size()) throw ContractError("empty polynomial text");
    bool first = true;
    while (pos_ < text_.size()) {
      std::int64_t sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ContractError("expected '+' or '-' at position " +
                            std::to_string(pos_));
      }
      parse_term(sign);
      skip_ws();
      first = false;
    }
    return poly_;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::int64_t parse_number() {
    std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000'000) throw ContractError("number too large");
      ++pos_;
    }
    if (pos_ == start) {
      throw ContractError("expected a number at position " +
                          std::to_string(pos_));
    }
    return value;
  }

  void parse_term(std::int64_t sign) {
    skip_ws();
    std::int64_t coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_number();
      saw_coeff = true;
    }
    std::vector<std::int32_t> exponents(static_cast<std::size_t>(n_), 0);
    bool saw_factor = false;
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      } else if (saw_factor || (saw_coeff && peek() != 'x')) {
        break;
      }
      if (peek() != 'x') {
        if (saw_factor || saw_coeff) break;
        throw ContractError("expected a variable at position " +
                            std::to_string(pos_));
      }
      ++pos_;
      const std::int64_t idx = parse_number();
      if (idx < 1 || idx > n_) {
        throw ContractError("variable index out of range: x" +
                            std::to_string(idx));
      }
      std::int64_t exp = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        exp = parse_number();
        if (exp > 1'000'000) throw ContractError("exponent too large");
      }
      exponents[static_cast<std::size_t>(idx - 1)] += static_cast<std::int32_t>(exp);
      saw_factor = true;
    }
    if (!saw_factor && !saw_coeff) {
      throw ContractError("empty term at position " + std::to_string(pos_));
    }
    poly_.add_term(std::move(exponents), sign * coeff);
  }

  const std::string& text_;
  std::int32_t p_;
  int n_;
  Polynomial poly_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::int32_t p, int n) {
  return Parser(text, p, n).run();
}

}  // namespace fplab
