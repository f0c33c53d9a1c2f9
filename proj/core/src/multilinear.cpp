#include "fplab/multilinear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fplab/errors.hpp"
#include "fplab/limits.hpp"

namespace fplab {

int MultisetIndex::multiplicity(int i) const {
  return static_cast<int>(std::count(entries.begin(), entries.end(), i));
}

std::vector<int> MultisetIndex::distinct() const {
  std::vector<int> out = entries;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MultisetIndex MultisetIndex::remove_one(int i) const {
  MultisetIndex out = *this;
  auto it = std::find(out.entries.begin(), out.entries.end(), i);
  if (it != out.entries.end()) out.entries.erase(it);
  return out;
}

std::uint64_t MultisetIndex::orderings() const {
  std::uint64_t fact = 1;
  for (int j = 2; j <= size(); ++j) fact *= static_cast<std::uint64_t>(j);
  for (const int v : distinct()) {
    const int m = multiplicity(v);
    std::uint64_t mf = 1;
    for (int j = 2; j <= m; ++j) mf *= static_cast<std::uint64_t>(j);
    fact /= mf;
  }
  return fact;
}

std::vector<MultisetIndex> multisets_of_size(int d, int s) {
  std::vector<MultisetIndex> out;
  if (s == 0) {
    out.push_back(MultisetIndex{});
    return out;
  }
  if (d <= 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(s), 0);
  for (;;) {
    out.push_back(MultisetIndex{cur});
    // Next nondecreasing sequence over [0, d).
    int i = s - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == d - 1) --i;
    if (i < 0) break;
    const int v = cur[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < s; ++j) cur[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

MultilinearForm::MultilinearForm(std::int32_t p, int n, int d)
    : p_(p), n_(n), d_(d) {
  PrimeModulus check(p);
  // d = 0 is the constant form, reachable by binding every slot.
  if (n < 0 || d < 0) throw ContractError("invalid multilinear form shape");
}

void MultilinearForm::set_entry(std::vector<std::int32_t> coords,
                                std::int32_t coeff) {
  if (static_cast<int>(coords.size()) != d_) {
    throw ContractError("tensor index arity mismatch");
  }
  if (!std::is_sorted(coords.begin(), coords.end())) {
    throw ContractError("tensor index must be sorted");
  }
  for (const auto c : coords) {
    if (c < 0 || c >= n_) throw ContractError("tensor index out of range");
  }
  PrimeModulus mod(p_);
  const std::int32_t cr = mod.reduce(coeff);
  if (cr == 0) {
    tensor_.erase(coords);
  } else {
    tensor_[coords] = cr;
  }
}

MultilinearForm MultilinearForm::derived_from(const Polynomial& pi, int d) {
  if (d < 1) throw ContractError("arity must be at least 1");
  if (pi.degree() > d) {
    throw ContractError("polynomial degree exceeds the requested arity");
  }
  MultilinearForm out(pi.p(), pi.n(), d);
  out.source_ = pi;
  PrimeModulus mod(pi.p());
  // Tensor entries are the form's values on basis tuples; multilinearity
  // makes these determine the form.
  for (const auto& V : multisets_of_size(pi.n(), d)) {
    std::int32_t value = 0;
    for (std::uint32_t eps = 0; eps < (1u << d); ++eps) {
      Point arg(static_cast<std::size_t>(pi.n()), 0);
      int bits = 0;
      for (int t = 0; t < d; ++t) {
        if (eps & (1u << t)) {
          ++bits;
          const int coord = V.entries[static_cast<std::size_t>(t)];
          arg[static_cast<std::size_t>(coord)] =
              mod.add(arg[static_cast<std::size_t>(coord)], 1);
        }
      }
      const std::int32_t term = pi.eval(arg);
      value = ((d - bits) % 2 == 0) ? mod.add(value, term) : mod.sub(value, term);
    }
    if (value != 0) {
      std::vector<std::int32_t> coords(V.entries.begin(), V.entries.end());
      out.tensor_.emplace(std::move(coords), value);
    }
  }
  return out;
}

MultilinearForm MultilinearForm::canonical_monomial_form(const Polynomial& pi,
                                                         int s) {
  if (s < 1 || s >= pi.p()) {
    throw ContractError(
        "symmetrization needs 1 <= s < p (dividing by s! in F_p)");
  }
  if (pi.homogeneous_component(s) != pi) {
    throw ContractError("polynomial is not homogeneous of the stated degree");
  }
  PrimeModulus mod(pi.p());
  std::int32_t fact = 1;
  for (int j = 2; j <= s; ++j) fact = mod.mul(fact, j);
  return derived_from(pi, s).scaled(mod.inv(fact));
}

const Polynomial& MultilinearForm::source() const {
  if (!source_) throw ContractError("form has no source polynomial");
  return *source_;
}

std::int32_t MultilinearForm::eval(const std::vector<Point>& args) const {
  if (static_cast<int>(args.size()) != d_) {
    throw ContractError("argument count does not match arity");
  }
  PrimeModulus mod(p_);
  std::int64_t sum = 0;
  for (const auto& [coords, coeff] : tensor_) {
    // Sum the products over all distinct slot assignments of the multiset.
    std::vector<std::int32_t> perm(coords);
    std::int64_t orbit = 0;
    do {
      std::int64_t prod = coeff;
      for (int t = 0; t < d_; ++t) {
        prod = (prod *
                args[static_cast<std::size_t>(t)]
                    [static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])]) %
               p_;
        if (prod == 0) break;
      }
      orbit += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    sum = (sum + orbit) % p_;
  }
  return static_cast<std::int32_t>(sum);
}

std::int32_t MultilinearForm::eval_from_source(const std::vector<Point>& args,
                                               const Point& base) const {
  const Polynomial& pi = source();
  if (static_cast<int>(args.size()) != d_) {
    throw ContractError("argument count does not match arity");
  }
  PrimeModulus mod(p_);
  std::int32_t value = 0;
  for (std::uint32_t eps = 0; eps < (1u << d_); ++eps) {
    Point arg = base;
    int bits = 0;
    for (int t = 0; t < d_; ++t) {
      if (eps & (1u << t)) {
        ++bits;
        arg = mod.add(arg, args[static_cast<std::size_t>(t)]);
      }
    }
    const std::int32_t term = pi.eval(arg);
    value = ((d_ - bits) % 2 == 0) ? mod.add(value, term) : mod.sub(value, term);
  }
  return value;
}

MultilinearForm MultilinearForm::bind_last(const Point& y) const {
  if (d_ < 1) throw ContractError("nothing to bind in a constant form");
  if (static_cast<int>(y.size()) != n_) {
    throw ContractError("bound point dimension mismatch");
  }
  PrimeModulus mod(p_);
  MultilinearForm out(p_, n_, d_ - 1);
  for (const auto& W : multisets_of_size(n_, d_ - 1)) {
    // kappa'(e_W) = sum_i y_i * kappa(e_W, e_i).
    std::int64_t value = 0;
    for (std::int32_t i = 0; i < n_; ++i) {
      if (y[static_cast<std::size_t>(i)] == 0) continue;
      std::vector<std::int32_t> coords(W.entries.begin(), W.entries.end());
      coords.insert(std::lower_bound(coords.begin(), coords.end(), i), i);
      const auto it = tensor_.find(coords);
      if (it == tensor_.end()) continue;
      value += std::int64_t(it->second) * y[static_cast<std::size_t>(i)];
    }
    const std::int32_t v = mod.reduce(value);
    if (v != 0) {
      out.tensor_.emplace(
          std::vector<std::int32_t>(W.entries.begin(), W.entries.end()), v);
    }
  }
  return out;
}

MultilinearForm MultilinearForm::plus(const MultilinearForm& o) const {
  if (o.p_ != p_ || o.n_ != n_ || o.d_ != d_) {
    throw ContractError("multilinear form shape mismatch");
  }
  PrimeModulus mod(p_);
  MultilinearForm out = *this;
  out.source_.reset();
  for (const auto& [coords, coeff] : o.tensor_) {
    auto it = out.tensor_.find(coords);
    if (it == out.tensor_.end()) {
      out.tensor_.emplace(coords, coeff);
    } else {
      it->second = mod.add(it->second, coeff);
      if (it->second == 0) out.tensor_.erase(it);
    }
  }
  return out;
}

MultilinearForm MultilinearForm::scaled(std::int32_t c) const {
  PrimeModulus mod(p_);
  const std::int32_t cr = mod.reduce(c);
  MultilinearForm out(p_, n_, d_);
  if (cr == 0) return out;
  for (const auto& [coords, coeff] : tensor_) {
    out.tensor_.emplace(coords, mod.mul(coeff, cr));
  }
  return out;
}

Polynomial MultilinearForm::diagonal() const {
  Polynomial out(p_, n_);
  for (const auto& [coords, coeff] : tensor_) {
    std::vector<std::int32_t> exps(static_cast<std::size_t>(n_), 0);
    for (const auto c : coords) ++exps[static_cast<std::size_t>(c)];
    MultisetIndex V{std::vector<int>(coords.begin(), coords.end())};
    const std::int64_t weight =
        static_cast<std::int64_t>(V.orderings() %
                                  static_cast<std::uint64_t>(p_));
    out.add_term(std::move(exps), weight * coeff);
  }
  return out;
}

double RankValue::rank() const {
  if (kernel_count == 0) return std::numeric_limits<double>::infinity();
  return (std::log(static_cast<double>(domain_size)) -
          std::log(static_cast<double>(kernel_count))) /
         std::log(static_cast<double>(p));
}

RankValue analytic_rank(const MultilinearForm& kappa) {
  const std::int32_t p = kappa.p();
  const int n = kappa.n();
  const int d = kappa.d();
  if (d < 1) throw ContractError("rank of a constant form is undefined");
  if (d == 1) {
    return RankValue{p, kappa.is_zero() ? std::uint64_t(1) : std::uint64_t(0), 1};
  }
  const std::uint64_t tuples = domain_size(p, n * (d - 1));
  charge(tuples * static_cast<std::uint64_t>(n));

  // Pre-bind the first slot to each basis vector; the kernel condition is
  // that all n of these (d-1)-linear forms vanish on the tuple.
  std::vector<MultilinearForm> basis_forms;
  basis_forms.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Point e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    basis_forms.push_back(kappa.bind_last(e));  // symmetric, any slot works
  }

  std::uint64_t count = 0;
  std::vector<Point> tuple(static_cast<std::size_t>(d - 1));
  const std::uint64_t block = domain_size(p, n);
  for (std::uint64_t idx = 0; idx < tuples; ++idx) {
    std::uint64_t rest = idx;
    for (int t = d - 2; t >= 0; --t) {
      tuple[static_cast<std::size_t>(t)] =
          decode_point(p, rest % block, n);
      rest /= block;
    }
    bool in_kernel = true;
    for (const auto& form : basis_forms) {
      if (form.eval(tuple) != 0) {
        in_kernel = false;
        break;
      }
    }
    if (in_kernel) ++count;
  }
  return RankValue{p, count, tuples};
}

ResidueCounter value_census(const MultilinearForm& kappa) {
  const std::int32_t p = kappa.p();
  const int n = kappa.n();
  const int d = kappa.d();
  const std::uint64_t tuples = domain_size(p, n * d);
  charge(tuples);
  ResidueCounter counter(p);
  std::vector<Point> tuple(static_cast<std::size_t>(d));
  const std::uint64_t block = domain_size(p, n);
  for (std::uint64_t idx = 0; idx < tuples; ++idx) {
    std::uint64_t rest = idx;
    for (int t = d - 1; t >= 0; --t) {
      tuple[static_cast<std::size_t>(t)] = decode_point(p, rest % block, n);
      rest /= block;
    }
    counter.add(kappa.eval(tuple));
  }
  return counter;
}

RestrictionProfile restricted_rank_profile(const MultilinearForm& kappa) {
  if (kappa.d() < 2) {
    throw ContractError("restriction profile needs arity at least 2");
  }
  const std::int32_t p = kappa.p();
  const int n = kappa.n();
  const std::uint64_t points = domain_size(p, n);
  RestrictionProfile out;
  out.per_y.reserve(static_cast<std::size_t>(points));
  for (std::uint64_t yi = 0; yi < points; ++yi) {
    out.per_y.push_back(analytic_rank(kappa.bind_last(decode_point(p, yi, n))));
  }
  out.whole = analytic_rank(kappa);
  return out;
}

std::int32_t BlockMonomial::eval(const std::vector<Point>& x) const {
  PrimeModulus mod(form.p());
  std::vector<Point> args;
  args.reserve(static_cast<std::size_t>(index.size()));
  for (const int slot : index.entries) {
    args.push_back(x[static_cast<std::size_t>(slot)]);
  }
  return mod.mul(mod.reduce(coeff), form.eval(args));
}

std::int32_t BlockPolynomial::eval(const std::vector<Point>& x) const {
  if (terms.empty()) return 0;
  PrimeModulus mod(terms.front().form.p());
  std::int32_t sum = 0;
  for (const auto& term : terms) sum = mod.add(sum, term.eval(x));
  return sum;
}

BlockPolynomial monomial_partial_derivative(const MultilinearForm& kappa_v,
                                            const MultisetIndex& V,
                                            const Point& y, int i) {
  if (V.size() != kappa_v.d()) {
    throw ContractError("multiset size does not match form arity");
  }
  BlockPolynomial out;
  const int t = V.multiplicity(i);
  if (t == 0) return out;

  // mu(x) - mu(x - y e_i) = sum_{j=1}^{t} (-1)^{j+1} C(t,j) kappa(x_{V'}, y^j)
  // with V' = V minus j copies of i; binomials stay small (t <= d).
  PrimeModulus mod(kappa_v.p());
  std::vector<std::int64_t> choose(static_cast<std::size_t>(t) + 1, 0);
  choose[0] = 1;
  for (int row = 1; row <= t; ++row) {
    for (int col = row; col >= 1; --col) choose[static_cast<std::size_t>(col)] +=
        choose[static_cast<std::size_t>(col) - 1];
  }

  MultisetIndex W = V;
  MultilinearForm bound = kappa_v;
  for (int j = 1; j <= t; ++j) {
    W = W.remove_one(i);
    bound = bound.bind_last(y);
    const std::int32_t sign = (j % 2 == 1) ? 1 : -1;
    const std::int32_t coeff =
        mod.reduce(sign * choose[static_cast<std::size_t>(j)]);
    out.terms.push_back(BlockMonomial{W, bound, coeff});
  }
  return out;
}

}  // namespace fplab
