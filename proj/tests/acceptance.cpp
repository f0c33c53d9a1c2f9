// Acceptance gate: one pass/fail line per criterion, exit code counts the
// failures. Exact claims are compared as rationals or integers; measured
// inequalities carry a pinned 1e-9 slack.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fplab/constructions.hpp"
#include "fplab/counting.hpp"
#include "fplab/decomposition.hpp"
#include "fplab/errors.hpp"
#include "fplab/field.hpp"
#include "fplab/fp_matrix.hpp"
#include "fplab/linear_system.hpp"
#include "fplab/multilinear.hpp"
#include "fplab/phase.hpp"
#include "fplab/polynomial.hpp"
#include "fplab/random.hpp"
#include "fplab/rational.hpp"
#include "fplab/residue.hpp"
#include "fplab/system_analysis.hpp"
#include "fplab/table.hpp"
#include "fplab/uniformity.hpp"

namespace fplab {
namespace {

constexpr double kSlack = 1e-9;

struct Fixture {
  std::int32_t p;
  int n;
  int d;
  std::uint64_t seed;
};

// p in {3,5}, n <= 3, d in {2,3}, restricted to degrees the canonical
// exponent cap n(p-1) can carry.
std::vector<Fixture> norm_grid(int count, std::uint64_t seed0) {
  std::vector<Fixture> combos;
  for (const std::int32_t p : {3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      for (int d = 2; d <= 3; ++d) {
        if (d <= n * (p - 1)) combos.push_back({p, n, d, 0});
      }
    }
  }
  std::vector<Fixture> out;
  for (int i = 0; i < count; ++i) {
    Fixture fx = combos[static_cast<std::size_t>(i) % combos.size()];
    fx.seed = seed0 + static_cast<std::uint64_t>(i);
    out.push_back(fx);
  }
  return out;
}

std::vector<std::vector<std::int32_t>> exponent_vectors(std::int32_t p, int n,
                                                        int cap) {
  std::vector<std::vector<std::int32_t>> out;
  std::vector<std::int32_t> e(static_cast<std::size_t>(n), 0);
  while (true) {
    int i = n - 1;
    while (i >= 0) {
      if (e[static_cast<std::size_t>(i)] < p - 1) {
        ++e[static_cast<std::size_t>(i)];
        break;
      }
      e[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    int total = 0;
    for (const auto v : e) total += v;
    if (total >= 1 && total <= cap) out.push_back(e);
  }
  return out;
}

Polynomial random_polynomial(Rng& rng, std::int32_t p, int n, int deg) {
  Polynomial out(p, n);
  std::vector<std::vector<std::int32_t>> top;
  for (const auto& e : exponent_vectors(p, n, deg)) {
    int total = 0;
    for (const auto v : e) total += v;
    if (total == deg) top.push_back(e);
    if (rng.below(2) == 0) out.add_term(e, rng.residue(p));
  }
  if (out.degree() != deg) {
    out.add_term(top[rng.below(top.size())], rng.nonzero_residue(p));
  }
  return out;
}

MultilinearForm random_form(Rng& rng, std::int32_t p, int n, int d) {
  return MultilinearForm::derived_from(random_polynomial(rng, p, n, d), d);
}

std::complex<double> random_disc(Rng& rng) {
  const double r = std::sqrt(rng.unit_real());
  const double theta = 2.0 * std::acos(-1.0) * rng.unit_real();
  return {r * std::cos(theta), r * std::sin(theta)};
}

TableFunction random_bounded_table(Rng& rng, std::int32_t p, int n) {
  TableFunction f(p, n);
  for (std::uint64_t i = 0; i < f.size(); ++i) f[i] = random_disc(rng);
  return f;
}

std::vector<Point> random_tuple(Rng& rng, std::int32_t p, int n, int count) {
  std::vector<Point> args;
  args.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) args.push_back(rng.point(p, n));
  return args;
}

// 1. The exact 2^d-th power of the U^d norm of a polynomial phase equals the
// kernel density of its derived form, as rationals, zero tolerance.
bool norm_rank_equality(std::string& detail) {
  std::vector<Fixture> grid = norm_grid(50, 101);
  grid.push_back({3, 2, 4, 991});
  grid.push_back({3, 2, 4, 992});
  int checked = 0;
  for (const auto& fx : grid) {
    Rng rng(fx.seed);
    const Polynomial pi = random_polynomial(rng, fx.p, fx.n, fx.d);
    const Rational power = exact_phase_unorm_power(pi, fx.d);
    const Rational alpha =
        analytic_rank(MultilinearForm::derived_from(pi, fx.d)).alpha();
    if (power != alpha) {
      detail = "norm power " + power.to_string() + " != kernel density " +
               alpha.to_string() + " at p=" + std::to_string(fx.p) +
               " n=" + std::to_string(fx.n) + " d=" + std::to_string(fx.d) +
               " seed=" + std::to_string(fx.seed);
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " fixtures, all exact";
  return true;
}

// 2. |E omega^pi| <= p^{-r/2^{d-1}} with 1e-9 slack on the same grid, and
// the diagonal quadratic achieves |E omega^q|^2 = p^{-n} exactly.
bool gauss_bounds(std::string& detail) {
  for (const auto& fx : norm_grid(50, 202)) {
    Rng rng(fx.seed);
    const Polynomial pi = random_polynomial(rng, fx.p, fx.n, fx.d);
    const RankValue rank =
        analytic_rank(MultilinearForm::derived_from(pi, fx.d));
    const RootTable roots(fx.p);
    const double lhs = std::abs(pi.value_distribution().mean(roots));
    const double rhs =
        std::pow(rank.alpha().to_double(),
                 1.0 / static_cast<double>(1ull << (fx.d - 1)));
    if (lhs > rhs + kSlack) {
      detail = "|mean| " + std::to_string(lhs) + " exceeds bound " +
               std::to_string(rhs) + " at p=" + std::to_string(fx.p) +
               " n=" + std::to_string(fx.n) + " d=" + std::to_string(fx.d);
      return false;
    }
  }
  for (const std::int32_t p : {3, 5}) {
    for (int n = 1; n <= 4; ++n) {
      const auto exact =
          power_polynomial(2, p, n).value_distribution().exact_mean_abs_squared();
      if (!exact || *exact != Rational::inverse_power(p, n)) {
        detail = "diagonal |mean|^2 at p=" + std::to_string(p) +
                 " n=" + std::to_string(n) + " is not exactly p^-n";
        return false;
      }
    }
  }
  detail = "50 seeded bounds and 8 exact diagonal values";
  return true;
}

// 3. The derived form is symmetric, multilinear, and independent of the
// base point of the alternating sum; 100 exact samples per fixture.
bool derived_form_contract(std::string& detail) {
  const int samples = 100;
  std::vector<Fixture> combos;
  for (const auto& fx : norm_grid(11, 303)) combos.push_back(fx);
  for (const auto& fx : combos) {
    Rng rng(fx.seed);
    const PrimeModulus mod(fx.p);
    const Polynomial pi = random_polynomial(rng, fx.p, fx.n, fx.d);
    const MultilinearForm kappa = MultilinearForm::derived_from(pi, fx.d);
    for (int t = 0; t < samples; ++t) {
      const auto args = random_tuple(rng, fx.p, fx.n, fx.d);
      auto perm = args;
      for (std::size_t j = perm.size(); j > 1; --j) {
        std::swap(perm[j - 1], perm[rng.below(j)]);
      }
      if (kappa.eval(args) != kappa.eval(perm)) {
        detail = "symmetry failed at p=" + std::to_string(fx.p) +
                 " n=" + std::to_string(fx.n) + " d=" + std::to_string(fx.d);
        return false;
      }
    }
    for (int t = 0; t < samples; ++t) {
      auto args = random_tuple(rng, fx.p, fx.n, fx.d);
      const auto slot = rng.below(static_cast<std::uint64_t>(fx.d));
      const Point u = rng.point(fx.p, fx.n);
      const Point v = rng.point(fx.p, fx.n);
      const std::int32_t a = rng.residue(fx.p);
      const std::int32_t b = rng.residue(fx.p);
      const auto eval_with = [&](const Point& w) {
        args[slot] = w;
        return kappa.eval(args);
      };
      const std::int32_t left =
          eval_with(mod.add(mod.scale(a, u), mod.scale(b, v)));
      const std::int32_t right = mod.reduce(std::int64_t(a) * eval_with(u) +
                                            std::int64_t(b) * eval_with(v));
      if (left != right) {
        detail = "multilinearity failed at p=" + std::to_string(fx.p) +
                 " n=" + std::to_string(fx.n) + " d=" + std::to_string(fx.d);
        return false;
      }
    }
    for (int t = 0; t < samples; ++t) {
      const auto args = random_tuple(rng, fx.p, fx.n, fx.d);
      const std::int32_t direct = kappa.eval(args);
      if (direct != kappa.eval_from_source(args, rng.point(fx.p, fx.n)) ||
          direct != kappa.eval_from_source(args, rng.point(fx.p, fx.n))) {
        detail = "base point dependence at p=" + std::to_string(fx.p) +
                 " n=" + std::to_string(fx.n) + " d=" + std::to_string(fx.d);
        return false;
      }
    }
  }
  detail = std::to_string(combos.size()) + " fixtures x " +
           std::to_string(samples) + " samples x 3 properties";
  return true;
}

// 4. Averaging the restricted kernel density over the last slot recovers the
// kernel density of the whole form, exactly.
bool restriction_identities(std::string& detail) {
  for (int i = 0; i < 20; ++i) {
    const std::int32_t p = i % 4 < 2 ? 3 : 5;
    const int d = 2 + i % 2;
    const int n = 2;
    Rng rng(404 + static_cast<std::uint64_t>(i));
    const MultilinearForm kappa = random_form(rng, p, n, d);
    const RestrictionProfile profile = restricted_rank_profile(kappa);
    std::uint64_t restricted_sum = 0;
    for (const auto& rv : profile.per_y) restricted_sum += rv.kernel_count;
    if (restricted_sum != profile.whole.kernel_count) {
      detail = "restriction profile mismatch at fixture " + std::to_string(i);
      return false;
    }
    // The same identity through explicit last-slot binding.
    std::uint64_t bound_sum = 0;
    for (std::uint64_t yi = 0; yi < domain_size(p, n); ++yi) {
      bound_sum +=
          analytic_rank(kappa.bind_last(decode_point(p, yi, n))).kernel_count;
    }
    if (bound_sum != profile.whole.kernel_count) {
      detail = "bound-slot mismatch at fixture " + std::to_string(i);
      return false;
    }
  }
  detail = "20 seeded forms, kernel counts match exactly";
  return true;
}

// 5. Rank subadditivity for pairs and the invertible-combination inequality
// for triples, as exact integer comparisons.
bool subadditivity_and_combination(std::string& detail) {
  int done = 0;
  for (int i = 0; i < 100; ++i) {  // pairs
    const std::int32_t p = i % 2 == 0 ? 3 : 5;
    const int d = 2 + (i % 4) / 2;
    const int n = 2;
    Rng rng(505 + static_cast<std::uint64_t>(i));
    const MultilinearForm mu = random_form(rng, p, n, d);
    const MultilinearForm nu = random_form(rng, p, n, d);
    const RankValue rm = analytic_rank(mu);
    const RankValue rn = analytic_rank(nu);
    const RankValue rs = analytic_rank(mu.plus(nu));
    const unsigned twod = 1u << d;
    const BigUint left = BigUint(rs.kernel_count) *
                         BigUint(rs.domain_size).pow(2 * twod - 1);
    const BigUint right =
        (BigUint(rm.kernel_count) * BigUint(rn.kernel_count)).pow(twod);
    if (!(right <= left)) {
      detail = "pair subadditivity violated at fixture " + std::to_string(i);
      return false;
    }
    ++done;
  }
  for (int i = 0; i < 50; ++i) {  // triple sums
    const std::int32_t p = i % 2 == 0 ? 3 : 5;
    const int d = 2;
    const int n = 2;
    Rng rng(606 + static_cast<std::uint64_t>(i));
    std::vector<MultilinearForm> kappas;
    for (int j = 0; j < 3; ++j) kappas.push_back(random_form(rng, p, n, d));
    const RankValue rs =
        analytic_rank(kappas[0].plus(kappas[1]).plus(kappas[2]));
    const unsigned big_n = 36;  // (2m)^d with m = 3, d = 2
    BigUint right(1);
    for (const auto& k : kappas) {
      right = right * BigUint(analytic_rank(k).kernel_count);
    }
    right = right.pow(big_n);
    const BigUint left = BigUint(rs.kernel_count) *
                         BigUint(rs.domain_size).pow(3 * big_n - 1);
    if (!(right <= left)) {
      detail = "triple subadditivity violated at fixture " + std::to_string(i);
      return false;
    }
    ++done;
  }
  for (int i = 0; i < 50; ++i) {  // invertible combinations
    const std::int32_t p = i % 2 == 0 ? 3 : 5;
    const int d = 2;
    const int n = 2;
    Rng rng(707 + static_cast<std::uint64_t>(i));
    std::vector<MultilinearForm> kappas;
    std::vector<RankValue> ranks;
    for (int j = 0; j < 3; ++j) {
      kappas.push_back(random_form(rng, p, n, d));
      ranks.push_back(analytic_rank(kappas.back()));
    }
    std::size_t star = 0;
    for (std::size_t j = 1; j < ranks.size(); ++j) {
      if (ranks[j].kernel_count < ranks[star].kernel_count) star = j;
    }
    FpMatrix combiner(p, 3, 3);
    bool invertible = false;
    for (int attempt = 0; attempt < 80 && !invertible; ++attempt) {
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) combiner.set(r, c, rng.residue(p));
      }
      invertible = eliminate(combiner).rank == 3;
    }
    const unsigned big_n = 36;
    const std::uint64_t domain = ranks[0].domain_size;
    bool witnessed = false;
    for (int c = 0; c < 3 && !witnessed; ++c) {
      MultilinearForm eta(p, n, d);
      for (int r = 0; r < 3; ++r) {
        eta = eta.plus(kappas[static_cast<std::size_t>(r)].scaled(
            combiner.at(r, c)));
      }
      const BigUint left =
          BigUint(analytic_rank(eta).kernel_count).pow(big_n) *
          BigUint(domain);
      const BigUint right =
          BigUint(ranks[star].kernel_count) * BigUint(domain).pow(big_n);
      witnessed = left <= right;
    }
    if (!invertible || !witnessed) {
      detail = "no column kept rank R/(2m)^d at fixture " + std::to_string(i);
      return false;
    }
    ++done;
  }
  detail = std::to_string(done) + " exact comparisons, zero violations";
  return true;
}

// 6. |E omega^{sum pi_i(L_i(x))}| <= p^{-R/(2^k (2m)^2)} on the three-term
// progression and on {x, y, x+y}, p=5, n=2, degrees 2..3.
bool system_phase_bounds(std::string& detail) {
  const std::int32_t p = 5;
  const int n = 2;
  const LinearSystem ap3 = arithmetic_progression_system(p, 3);
  if (!degree_independence(ap3, 2)) {
    detail = "progression lost degree-2 independence";
    return false;
  }
  const std::vector<std::vector<int>> mixes = {
      {2, 2, 2}, {3, 2, 2}, {2, 3, 2}, {2, 2, 3}, {3, 3, 2},
      {3, 2, 3}, {2, 3, 3}, {3, 3, 3}, {2, 2, 2}, {3, 2, 2}};
  for (std::size_t i = 0; i < mixes.size(); ++i) {
    Rng rng(808 + i);
    std::vector<Polynomial> phases;
    double min_rank = 0.0;
    int k = 2;
    for (std::size_t j = 0; j < mixes[i].size(); ++j) {
      const int deg = mixes[i][j];
      k = std::max(k, deg);
      const Polynomial pi = random_polynomial(rng, p, n, deg);
      const double r =
          analytic_rank(MultilinearForm::derived_from(pi, deg)).rank();
      min_rank = j == 0 ? r : std::min(min_rank, r);
      phases.push_back(pi);
    }
    const CountReport rep = phase_system_average(phases, ap3);
    const double rhs =
        std::pow(static_cast<double>(p),
                 -min_rank / (static_cast<double>(1u << k) * 36.0));
    if (std::abs(rep.average) > rhs + kSlack) {
      detail = "progression bound violated at mix " + std::to_string(i);
      return false;
    }
  }
  const LinearSystem offdiag(
      p, {LinearForm{{1, 0}}, LinearForm{{0, 1}}, LinearForm{{1, 1}}});
  for (std::size_t i = 0; i < 10; ++i) {
    const int k_top = i % 2 == 0 ? 3 : 2;
    const RowCertificate cert = row_independence_certificate(
        power_coefficient_matrix(offdiag, k_top), 0);
    if (!cert.independent) {
      detail = "top power lost row independence at k=" + std::to_string(k_top);
      return false;
    }
    Rng rng(909 + i);
    std::vector<Polynomial> phases;
    const std::vector<int> degrees = {k_top, 1, 2};
    for (const int deg : degrees) {
      phases.push_back(random_polynomial(rng, p, n, deg));
    }
    const double top_rank =
        analytic_rank(MultilinearForm::derived_from(phases[0], k_top)).rank();
    const CountReport rep = phase_system_average(phases, offdiag);
    const double rhs =
        std::pow(static_cast<double>(p),
                 -top_rank / (static_cast<double>(1u << k_top) * 36.0));
    if (std::abs(rep.average) > rhs + kSlack) {
      detail = "off-diagonal bound violated at fixture " + std::to_string(i);
      return false;
    }
  }
  detail = "20 seeded fixtures on both systems, zero violations";
  return true;
}

// 7. |E prod f_i(L_i(x))| <= min_i |f_i|_{U^{k+1}} prod_{j != i} max|f_j|
// with 1e-9 slack, k the Cauchy-Schwarz complexity.
bool generalized_von_neumann(std::string& detail) {
  int done = 0;
  for (int i = 0; i < 100; ++i) {
    const std::int32_t p = i % 2 == 0 ? 3 : 5;
    const int n = 1 + (i / 2) % 2;
    const bool use_progression = i % 4 < 2;
    const LinearSystem system =
        use_progression
            ? arithmetic_progression_system(p, 3)
            : LinearSystem(
                  p, {LinearForm{{1, 0}}, LinearForm{{0, 1}},
                      LinearForm{{1, 1}}});
    const int k = cs_complexity(system).value.value_or(1);
    Rng rng(1010 + static_cast<std::uint64_t>(i));
    std::vector<TableFunction> functions;
    for (int j = 0; j < system.m(); ++j) {
      functions.push_back(random_bounded_table(rng, p, n));
    }
    const CountReport rep = system_average(functions, system);
    double best = 0.0;
    for (std::size_t a = 0; a < functions.size(); ++a) {
      double candidate = gowers_norm(functions[a], k + 1).value;
      for (std::size_t b = 0; b < functions.size(); ++b) {
        if (b != a) candidate *= functions[b].max_abs();
      }
      best = a == 0 ? candidate : std::min(best, candidate);
    }
    if (std::abs(rep.average) > best + kSlack) {
      detail = "tuple " + std::to_string(i) + " exceeds the norm bound: " +
               std::to_string(std::abs(rep.average)) + " > " +
               std::to_string(best);
      return false;
    }
    ++done;
  }
  detail = std::to_string(done) + " seeded tuples on both systems";
  return true;
}

// 8. Analyzer golden values: the three-term progression has minimal
// independence degree 2, predicted complexity 1, Cauchy-Schwarz complexity 1;
// the four-term progression over F_7 has 3, 2, 2.
bool analyzer_goldens(std::string& detail) {
  const SystemAnalysis ap3 =
      analyze_system(arithmetic_progression_system(5, 3), 4);
  if (ap3.s_star != 2 || ap3.predicted_true_complexity != 1 ||
      ap3.cs.value != 1) {
    detail = "three-term progression analysis off the golden values";
    return false;
  }
  const SystemAnalysis ap4 =
      analyze_system(arithmetic_progression_system(7, 4), 6);
  if (ap4.s_star != 3 || ap4.predicted_true_complexity != 2 ||
      ap4.cs.value != 2) {
    detail = "four-term progression analysis off the golden values";
    return false;
  }
  detail = "both systems match (2,1,1) and (3,2,2)";
  return true;
}

// 9. Four phases on the four-term progression with product average exactly 1
// while every factor has |f_i|_{U^2}^4 = p^-n exactly.
bool offdiagonal_average_one(std::string& detail) {
  const LinearSystem sys = arithmetic_progression_system(5, 4);
  for (const int n : {2, 3}) {
    const OffDiagonalWitness w =
        offdiagonal_example(sys, {2, 2, 2, 2}, n, 20240817);
    if (!w.certification.exact_real_average ||
        *w.certification.exact_real_average != Rational::integer(1)) {
      detail = "product average is not exactly 1 at n=" + std::to_string(n);
      return false;
    }
    for (const auto& norm : w.norms) {
      if (!norm.exact_power ||
          *norm.exact_power !=
              Rational::inverse_power(5, static_cast<unsigned>(n))) {
        detail = "norm power of factor " + std::to_string(norm.i) +
                 " is not exactly 5^-" + std::to_string(n);
        return false;
      }
    }
  }
  detail = "average exactly 1 with factor norms 5^(-1/2) and 5^(-3/4)";
  return true;
}

// 10. The rank-gap filter conserves the function, keeps weight within M and
// surviving ranks at least R, meets the 5-epsilon rough bound whenever the
// realized precondition holds, and satisfies its four internal inequalities.
bool rank_gap_filter_criteria(std::string& detail) {
  const std::int32_t p = 3;
  const int n = 3;
  const std::vector<std::string> pool = {
      "x1^2", "x2^2", "x1^2+x2^2", "x1*x2", "x1^2+x2^2+x3^2", "x1*x2+x3^2"};
  int preconditioned = 0;
  for (int i = 0; i < 20; ++i) {
    Rng rng(1212 + static_cast<std::uint64_t>(i));
    PhaseCombination comb(p, n);
    const int terms = 2 + static_cast<int>(rng.below(3));
    for (int t = 0; t < terms; ++t) {
      const auto& text = pool[rng.below(pool.size())];
      comb.add_term(0.05 + 0.55 * rng.unit_real(),
                    parse_polynomial(text, p, n));
    }
    const double eps = 0.3 + 0.2 * static_cast<double>(i % 4);
    const double M = comb.weight() * 1.05;
    const double R = 1.0;
    TableFunction g(p, n);
    TableFunction h(p, n);
    if (i % 3 == 0) {
      g = random_bounded_table(rng, p, n).scaled(0.005);
      h = random_bounded_table(rng, p, n).scaled(0.01);
    }
    const TableFunction f = comb.materialize().plus(g).plus(h);
    const FilterReport rep = rank_gap_filter(f, comb, g, h, eps, M, R);

    const TableFunction rebuilt =
        rep.filtered.structured.materialize().plus(rep.filtered.g).plus(
            rep.filtered.h);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      if (std::abs(rebuilt[x] - f[x]) > kSlack) {
        detail = "conservation broken at fixture " + std::to_string(i);
        return false;
      }
    }
    if (rep.filtered.structured.weight() > M + 1e-12) {
      detail = "surviving weight exceeds M at fixture " + std::to_string(i);
      return false;
    }
    for (const auto& term : rep.filtered.structured.terms()) {
      if (!term.rank || *term.rank < R - 1e-12) {
        detail = "a surviving rank fell below R at fixture " +
                 std::to_string(i);
        return false;
      }
    }
    if (rep.bounds.size() != 4) {
      detail = "expected four internal inequalities, saw " +
               std::to_string(rep.bounds.size());
      return false;
    }
    for (const auto& b : rep.bounds) {
      if (!b.pass) {
        detail = "internal inequality '" + b.name + "' failed at fixture " +
                 std::to_string(i) + ": " + std::to_string(b.lhs) + " > " +
                 std::to_string(b.rhs);
        return false;
      }
    }
    if (rep.precondition_met) {
      ++preconditioned;
      if (rep.h_out_l2 > 5.0 * eps + kSlack) {
        detail = "|h''|_2 exceeded 5 epsilon under the realized "
                 "precondition at fixture " +
                 std::to_string(i);
        return false;
      }
    }
  }
  detail = "20 fixtures; realized precondition held on " +
           std::to_string(preconditioned) + " of them";
  return true;
}

// 11. Exhaustive inverse search recovers a planted polynomial phase up to
// function equality, with correlation exactly 1.
bool planted_inverse_recovery(std::string& detail) {
  const std::int32_t p = 3;
  const int n = 2;
  std::vector<std::pair<std::string, int>> plants = {
      {"x1*x2", 2}, {"x1^2+2*x2", 2}, {"2*x1^2+x2^2", 2},
      {"x1^2+x1*x2+x2^2", 2}, {"x1+2*x2", 1}};
  for (std::size_t i = 0; i < plants.size(); ++i) {
    const Polynomial planted = parse_polynomial(plants[i].first, p, n);
    const TableFunction f = phase_table(planted);
    const InverseSearchResult res =
        inverse_search_exhaustive(f, plants[i].second);
    if (std::abs(res.correlation - std::complex<double>(1.0, 0.0)) > kSlack) {
      detail = "correlation below 1 for plant " + plants[i].first;
      return false;
    }
    const TableFunction found = phase_table(res.best);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      if (std::abs(found[x] - f[x]) > kSlack) {
        detail = "recovered polynomial differs as a function from " +
                 plants[i].first;
        return false;
      }
    }
  }
  detail = std::to_string(plants.size()) +
           " planted phases recovered exactly";
  return true;
}

// 12. The reparametrized and direct counting backends agree exactly on
// seeded systems with p^{nd} <= 10^7.
bool counting_backends_agree(std::string& detail) {
  int done = 0;
  for (int i = 0; i < 30; ++i) {
    const std::int32_t p = i % 2 == 0 ? 3 : 5;
    const int n = 1 + i % 2;
    LinearSystem system = [&]() {
      switch (i % 5) {
        case 0:
          return arithmetic_progression_system(p, 3);
        case 1:
          return arithmetic_progression_system(p, 4);
        case 2:
          return LinearSystem(p, {LinearForm{{1, 0}}, LinearForm{{0, 1}},
                                  LinearForm{{1, 1}}});
        case 3:
          return parse_system("1,0,0\n0,1,0\n1,1,0", p);
        default:
          return parse_system("1,0,0\n1,1,0\n1,2,0", p);
      }
    }();
    const std::uint64_t work = domain_size(p, n * system.d());
    if (work > 10'000'000) {
      detail = "fixture " + std::to_string(i) + " exceeds the point cap";
      return false;
    }
    Rng rng(1313 + static_cast<std::uint64_t>(i));
    std::vector<Polynomial> phases;
    for (int j = 0; j < system.m(); ++j) {
      const int deg = 1 + static_cast<int>(rng.below(2));
      phases.push_back(random_polynomial(rng, p, n, deg));
    }
    const CountReport direct = phase_system_average(phases, system, {}, false);
    const CountReport fast = phase_system_average(phases, system, {}, true);
    if (!direct.residue_histogram || !fast.residue_histogram) {
      detail = "missing residue histogram at fixture " + std::to_string(i);
      return false;
    }
    const std::uint64_t dt = direct.residue_histogram->total();
    const std::uint64_t ft = fast.residue_histogram->total();
    for (std::int32_t r = 0; r < p; ++r) {
      const std::uint64_t dc =
          direct.residue_histogram->counts()[static_cast<std::size_t>(r)];
      const std::uint64_t fc =
          fast.residue_histogram->counts()[static_cast<std::size_t>(r)];
      if (dc * ft != fc * dt) {
        detail = "histograms disagree at fixture " + std::to_string(i) +
                 " residue " + std::to_string(r);
        return false;
      }
    }
    ++done;
  }
  detail = std::to_string(done) + " fixtures agree exactly";
  return true;
}

struct Criterion {
  std::string name;
  bool (*fn)(std::string&);
  double time_limit_s;  // 0 means untimed
};

}  // namespace
}  // namespace fplab

int main() {
  using fplab::Criterion;
  const std::vector<Criterion> criteria = {
      {"exact-norm-rank-equality", &fplab::norm_rank_equality, 120.0},
      {"gauss-sum-bounds", &fplab::gauss_bounds, 0.0},
      {"derived-form-contract", &fplab::derived_form_contract, 0.0},
      {"restriction-and-derivative-rank", &fplab::restriction_identities,
       0.0},
      {"rank-subadditivity-and-combination",
       &fplab::subadditivity_and_combination, 0.0},
      {"system-phase-bound", &fplab::system_phase_bounds, 0.0},
      {"generalized-von-neumann", &fplab::generalized_von_neumann, 180.0},
      {"analyzer-golden-values", &fplab::analyzer_goldens, 0.0},
      {"offdiagonal-average-one", &fplab::offdiagonal_average_one, 0.0},
      {"rank-gap-filter", &fplab::rank_gap_filter_criteria, 0.0},
      {"planted-inverse-recovery", &fplab::planted_inverse_recovery, 60.0},
      {"counting-backends-agree", &fplab::counting_backends_agree, 0.0},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    bool pass = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      pass = criterion.fn(detail);
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (pass && criterion.time_limit_s > 0.0 &&
        elapsed > criterion.time_limit_s) {
      pass = false;
      detail = "over the " + std::to_string(criterion.time_limit_s) +
               "s budget (" + std::to_string(elapsed) + "s)";
    }
    std::ostringstream line;
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << ' ' << criterion.name << " ["
         << std::fixed << elapsed << "s] " << detail;
    std::cout << line.str() << '\n';
    if (!pass) ++failures;
  }
  std::cout << (12 - failures) << " of 12 criteria passed" << std::endl;
  return failures;
}
