#include "fplab/uniformity.hpp"

#include <algorithm>
#include <cmath>

#include "fplab/errors.hpp"
#include "fplab/limits.hpp"
#include "fplab/parallel.hpp"
#include "fplab/phase.hpp"
#include "fplab/random.hpp"

namespace fplab {

TableFunction multiplicative_derivative(const TableFunction& f, const Point& h) {
  return f.shifted(h).times(f.conjugated());
}

namespace {

double unorm_power_rec(const TableFunction& f, int k) {
  if (k == 1) return std::norm(f.mean());
  const std::uint64_t points = f.size();
  double sum = 0.0;
  for (std::uint64_t hi = 0; hi < points; ++hi) {
    const TableFunction df =
        multiplicative_derivative(f, decode_point(f.p(), hi, f.n()));
    sum += unorm_power_rec(df, k - 1);
  }
  return sum / static_cast<double>(points);
}

}  // namespace

double unorm_power(const TableFunction& f, int k) {
  if (k < 1) throw ContractError("box norm index must be at least 1");
  charge(2 * domain_size(f.p(), f.n() * k));
  if (k == 1) return std::norm(f.mean());

  // Parallel over the outermost difference variable; ordered reduction keeps
  // the result independent of the thread count.
  const std::uint64_t points = f.size();
  const double sum = parallel_reduce(
      points, 0.0,
      [&](std::uint64_t begin, std::uint64_t end) {
        double acc = 0.0;
        for (std::uint64_t hi = begin; hi < end; ++hi) {
          const TableFunction df =
              multiplicative_derivative(f, decode_point(f.p(), hi, f.n()));
          acc += unorm_power_rec(df, k - 1);
        }
        return acc;
      },
      [](double acc, double part) { return acc + part; });
  return sum / static_cast<double>(points);
}

UniformityReport gowers_norm(const TableFunction& f, int k) {
  UniformityReport report;
  report.k = k;
  report.cost = 2 * domain_size(f.p(), f.n() * k);
  const double power = std::max(unorm_power(f, k), 0.0);
  report.value = std::pow(power, 1.0 / std::ldexp(1.0, k));
  return report;
}

namespace {

std::uint64_t constant_leaf_count(const Polynomial& g, int remaining) {
  if (remaining == 0) return g.degree() <= 0 ? 1 : 0;
  // An affine difference polynomial stays constant under every further
  // difference, so the whole subtree passes.
  if (g.degree() <= 1) {
    return domain_size(g.p(), g.n() * remaining);
  }
  const std::uint64_t points = domain_size(g.p(), g.n());
  std::uint64_t total = 0;
  for (std::uint64_t hi = 0; hi < points; ++hi) {
    total += constant_leaf_count(g.delta(decode_point(g.p(), hi, g.n())),
                                 remaining - 1);
  }
  return total;
}

}  // namespace

Rational exact_phase_unorm_power(const Polynomial& pi, int k) {
  if (k < 1) throw ContractError("box norm index must be at least 1");
  if (pi.degree() > k) {
    throw ContractError(
        "exact recursion needs the norm index to reach the degree");
  }
  const std::uint64_t tuples = domain_size(pi.p(), pi.n() * (k - 1));
  charge(tuples);
  const std::uint64_t count = constant_leaf_count(pi, k - 1);
  return Rational(static_cast<std::int64_t>(count), tuples);
}

namespace {

void census_rec(const std::vector<std::int32_t>& residues,
                const PrimeModulus& mod, int n, int remaining,
                ResidueCounter& counter) {
  if (remaining == 0) {
    for (const auto r : residues) counter.add(r);
    return;
  }
  const std::uint64_t points = residues.size();
  std::vector<std::int32_t> next(residues.size());
  for (std::uint64_t hi = 0; hi < points; ++hi) {
    for (std::uint64_t x = 0; x < points; ++x) {
      next[static_cast<std::size_t>(x)] =
          mod.sub(residues[static_cast<std::size_t>(
                      shift_index(mod.p(), x, hi, n))],
                  residues[static_cast<std::size_t>(x)]);
    }
    census_rec(next, mod, n, remaining - 1, counter);
  }
}

}  // namespace

ResidueCounter phase_unorm_census(const Polynomial& pi, int k) {
  if (k < 1) throw ContractError("box norm index must be at least 1");
  const std::uint64_t total = domain_size(pi.p(), pi.n() * (k + 1));
  charge(total);
  const std::uint64_t points = domain_size(pi.p(), pi.n());
  std::vector<std::int32_t> residues(static_cast<std::size_t>(points));
  for (std::uint64_t i = 0; i < points; ++i) {
    residues[static_cast<std::size_t>(i)] =
        pi.eval(decode_point(pi.p(), i, pi.n()));
  }
  PrimeModulus mod(pi.p());
  ResidueCounter counter(pi.p());
  census_rec(residues, mod, pi.n(), k, counter);
  return counter;
}

std::complex<double> gowers_inner_product(
    const std::vector<TableFunction>& functions) {
  if (functions.empty() || (functions.size() & (functions.size() - 1)) != 0) {
    throw ContractError("need a power-of-two number of functions");
  }
  int K = 0;
  while ((std::size_t(1) << K) < functions.size()) ++K;
  const std::int32_t p = functions.front().p();
  const int n = functions.front().n();
  for (const auto& f : functions) {
    if (f.p() != p || f.n() != n) throw ContractError("table domain mismatch");
  }
  const std::uint64_t points = domain_size(p, n);
  const std::uint64_t tuples = domain_size(p, n * (K + 1));
  charge(tuples * functions.size());

  std::complex<double> sum = 0.0;
  std::vector<std::uint64_t> h(static_cast<std::size_t>(K));
  // Tuple index digits: x then h_1..h_K, each a point index.
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(K) + 1, 0);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::uint64_t rest = t;
    for (auto& dgt : digits) {
      dgt = rest % points;
      rest /= points;
    }
    std::complex<double> prod = 1.0;
    for (std::uint32_t eps = 0; eps < functions.size(); ++eps) {
      std::uint64_t arg = digits[0];
      int bits = 0;
      for (int b = 0; b < K; ++b) {
        if (eps & (1u << b)) {
          ++bits;
          arg = shift_index(p, arg, digits[static_cast<std::size_t>(b) + 1], n);
        }
      }
      const std::complex<double> v = functions[eps][arg];
      prod *= (bits % 2 == 1) ? std::conj(v) : v;
    }
    sum += prod;
  }
  return sum / static_cast<double>(tuples);
}

std::complex<double> correlation(const TableFunction& f, const Polynomial& pi) {
  if (f.p() != pi.p() || f.n() != pi.n()) {
    throw ContractError("table and polynomial domains differ");
  }
  RootTable roots(f.p());
  std::vector<std::complex<double>> prod(f.size());
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    prod[static_cast<std::size_t>(i)] =
        f[i] * std::conj(roots[pi.eval(decode_point(f.p(), i, f.n()))]);
  }
  return pairwise_sum(prod.data(), prod.size()) /
         static_cast<double>(prod.size());
}

TableFunction dual_operator(const Polynomial& pi) {
  const std::int32_t p = pi.p();
  const int n = pi.n();
  const int d = std::max(pi.degree(), 1);
  const std::uint64_t points = domain_size(p, n);
  const std::uint64_t tuples = domain_size(p, n * d);
  charge(domain_size(p, n * (d + 1)));

  RootTable roots(p);
  std::vector<std::complex<double>> phase(static_cast<std::size_t>(points));
  for (std::uint64_t i = 0; i < points; ++i) {
    phase[static_cast<std::size_t>(i)] =
        roots[pi.eval(decode_point(p, i, n))];
  }

  TableFunction out(p, n);
  std::vector<std::uint64_t> y(static_cast<std::size_t>(d));
  for (std::uint64_t x = 0; x < points; ++x) {
    std::complex<double> sum = 0.0;
    for (std::uint64_t t = 0; t < tuples; ++t) {
      std::uint64_t rest = t;
      for (auto& yi : y) {
        yi = rest % points;
        rest /= points;
      }
      std::complex<double> prod = 1.0;
      for (std::uint32_t eps = 1; eps < (1u << d); ++eps) {
        std::uint64_t arg = x;
        int bits = 0;
        for (int b = 0; b < d; ++b) {
          if (eps & (1u << b)) {
            ++bits;
            arg = shift_index(p, arg, y[static_cast<std::size_t>(b)], n);
          }
        }
        const std::complex<double> v = phase[static_cast<std::size_t>(arg)];
        prod *= (bits % 2 == 1) ? std::conj(v) : v;
      }
      sum += prod;
    }
    out[x] = sum / static_cast<double>(tuples);
  }
  return out;
}

namespace {

// Exponent vectors of the nonconstant canonical monomials of total degree at
// most d, in ascending lexicographic order. Constants only rotate the
// correlation phase, so they are not enumerated.
std::vector<std::vector<std::int32_t>> monomial_basis(std::int32_t p, int n,
                                                      int d) {
  std::vector<std::vector<std::int32_t>> out;
  std::vector<std::int32_t> e(static_cast<std::size_t>(n), 0);
  for (;;) {
    int total = 0;
    for (const auto v : e) total += v;
    if (total > 0 && total <= d) out.push_back(e);
    int i = n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == p - 1) {
      e[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial from_digits(std::int32_t p, int n,
                       const std::vector<std::vector<std::int32_t>>& basis,
                       const std::vector<std::int32_t>& digits) {
  Polynomial out(p, n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (digits[i] != 0) out.add_term(basis[i], digits[i]);
  }
  return out;
}

void consider(const TableFunction& f, const Polynomial& candidate,
              InverseSearchResult& best, bool& have) {
  const std::complex<double> c = correlation(f, candidate);
  if (!have || std::abs(c) > std::abs(best.correlation) ||
      (std::abs(c) == std::abs(best.correlation) && candidate < best.best)) {
    best.best = candidate;
    best.correlation = c;
    have = true;
  }
}

}  // namespace

InverseSearchResult inverse_search_exhaustive(const TableFunction& f, int d) {
  if (d < 0) throw ContractError("degree must be nonnegative");
  const std::int32_t p = f.p();
  const int n = f.n();
  const auto basis = monomial_basis(p, n, d);
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (candidates > limits().point_budget) break;
    candidates *= static_cast<std::uint64_t>(p);
  }
  charge(candidates * f.size());

  InverseSearchResult result{Polynomial(p, n), 0.0, candidates, true, 0};
  bool have = false;
  std::vector<std::int32_t> digits(basis.size(), 0);
  for (;;) {
    consider(f, from_digits(p, n, basis, digits), result, have);
    int i = static_cast<int>(basis.size()) - 1;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == p - 1) {
      digits[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++digits[static_cast<std::size_t>(i)];
  }
  return result;
}

InverseSearchResult inverse_search_sampled(const TableFunction& f, int d,
                                           std::uint64_t samples,
                                           std::uint64_t seed) {
  if (d < 0) throw ContractError("degree must be nonnegative");
  const std::int32_t p = f.p();
  const int n = f.n();
  const auto basis = monomial_basis(p, n, d);
  charge(samples * f.size());

  Rng rng(seed);
  InverseSearchResult result{Polynomial(p, n), 0.0, samples, false, seed};
  bool have = false;
  std::vector<std::int32_t> digits(basis.size(), 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& dgt : digits) dgt = rng.residue(p);
    consider(f, from_digits(p, n, basis, digits), result, have);
  }
  return result;
}

}  // namespace fplab
