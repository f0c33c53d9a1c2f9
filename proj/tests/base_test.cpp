#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "fplab/errors.hpp"
#include "fplab/field.hpp"
#include "fplab/limits.hpp"
#include "fplab/random.hpp"
#include "fplab/rational.hpp"
#include "fplab/residue.hpp"
#include "fplab/table.hpp"

namespace fplab {
namespace {

TEST(Rational, ArithmeticAndOrder) {
  const Rational half(1, 2);
  const Rational third(1, 3);
  EXPECT_TRUE(third < half);
  EXPECT_TRUE(third <= third);
  EXPECT_EQ(Rational(2, 4), half);
  EXPECT_EQ(Rational(-3, 6).to_string(), "-1/2");
  EXPECT_EQ(Rational(-3, 6) + half, Rational());
  EXPECT_EQ(Rational::integer(7).to_string(), "7");
  EXPECT_NEAR(Rational(1, 3).to_double(), 1.0 / 3.0, 1e-15);
}

TEST(Rational, InversePower) {
  EXPECT_EQ(Rational::inverse_power(5, 0), Rational::integer(1));
  EXPECT_EQ(Rational::inverse_power(5, 3), Rational(1, 125));
  EXPECT_EQ(Rational::inverse_power(3, 4), Rational(1, 81));
}

TEST(BigUint, MultiplyPowCompare) {
  const BigUint a(1'000'000'007ull);
  const BigUint b = a * a;
  EXPECT_EQ(b.to_string(), "1000000014000000049");
  EXPECT_TRUE(a < b);
  EXPECT_TRUE(a <= a);
  EXPECT_EQ(BigUint(2).pow(64).to_string(), "18446744073709551616");
  EXPECT_EQ(BigUint(3).pow(0), BigUint(1));
  EXPECT_TRUE(BigUint(0).is_zero());
  // 5^40 computed two ways
  EXPECT_EQ(BigUint(5).pow(40), BigUint(25).pow(20));
}

TEST(PrimeModulus, FieldOps) {
  const PrimeModulus mod(7);
  EXPECT_EQ(mod.reduce(-1), 6);
  EXPECT_EQ(mod.add(5, 4), 2);
  EXPECT_EQ(mod.sub(2, 5), 4);
  EXPECT_EQ(mod.mul(3, 5), 1);
  EXPECT_EQ(mod.neg(0), 0);
  EXPECT_EQ(mod.pow(3, 0), 1);
  EXPECT_EQ(mod.pow(3, 6), 1);
  for (std::int32_t a = 1; a < 7; ++a) {
    EXPECT_EQ(mod.mul(a, mod.inv(a)), 1);
  }
}

TEST(PrimeModulus, PointOps) {
  const PrimeModulus mod(3);
  const Point a = {1, 2};
  const Point b = {2, 2};
  EXPECT_EQ(mod.add(a, b), (Point{0, 1}));
  EXPECT_EQ(mod.sub(a, b), (Point{2, 0}));
  EXPECT_EQ(mod.scale(2, a), (Point{2, 1}));
}

TEST(Field, EncodeDecodeRoundTrip) {
  EXPECT_EQ(encode_point(3, {1, 2}), 5u);
  EXPECT_EQ(decode_point(3, 5, 2), (Point{1, 2}));
  for (std::uint64_t i = 0; i < domain_size(5, 3); ++i) {
    EXPECT_EQ(encode_point(5, decode_point(5, i, 3)), i);
  }
}

TEST(Field, ShiftIndexMatchesPointAddition) {
  const PrimeModulus mod(3);
  for (std::uint64_t x = 0; x < 9; ++x) {
    for (std::uint64_t h = 0; h < 9; ++h) {
      const Point sum = mod.add(decode_point(3, x, 2), decode_point(3, h, 2));
      EXPECT_EQ(shift_index(3, x, h, 2), encode_point(3, sum));
    }
  }
}

TEST(Field, DomainSize) {
  EXPECT_EQ(domain_size(3, 0), 1u);
  EXPECT_EQ(domain_size(3, 4), 81u);
  EXPECT_EQ(domain_size(5, 6), 15625u);
}

TEST(Field, RootTable) {
  const RootTable roots(5);
  std::complex<double> sum = 0.0;
  for (std::int32_t j = 0; j < 5; ++j) sum += roots[j];
  EXPECT_NEAR(std::abs(sum), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(roots[3]), 1.0, 1e-12);
  EXPECT_NEAR(roots[0].real(), 1.0, 1e-12);
}

TEST(ResidueCounter, ExactMeans) {
  ResidueCounter counter(3);
  counter.add(0, 5);
  counter.add(1, 2);
  counter.add(2, 2);
  ASSERT_TRUE(counter.exact_real_mean().has_value());
  EXPECT_EQ(*counter.exact_real_mean(), Rational(3, 9));
  const RootTable roots(3);
  EXPECT_NEAR(counter.mean(roots).real(), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(counter.mean(roots).imag(), 0.0, 1e-12);

  counter.add(1, 1);  // now unbalanced, no exact rational mean
  EXPECT_FALSE(counter.exact_real_mean().has_value());
}

TEST(ResidueCounter, ExactMeanAbsSquared) {
  // E omega^{x^2} over F_5 has |mean|^2 = 1/5.
  ResidueCounter counter(5);
  for (std::int32_t x = 0; x < 5; ++x) counter.add((x * x) % 5);
  ASSERT_TRUE(counter.exact_mean_abs_squared().has_value());
  EXPECT_EQ(*counter.exact_mean_abs_squared(), Rational(1, 5));
}

TEST(ResidueCounter, MergeAddsCounts) {
  ResidueCounter a(3), b(3);
  a.add(0, 2);
  b.add(2, 7);
  a.merge(b);
  EXPECT_EQ(a.counts()[2], 7u);
  EXPECT_EQ(a.total(), 9u);
  ResidueCounter c(5);
  EXPECT_THROW(a.merge(c), ContractError);
}

TEST(TableFunction, Algebra) {
  TableFunction f(3, 1);
  f[0] = {1.0, 0.0};
  f[1] = {0.0, 1.0};
  f[2] = {-1.0, 0.0};
  EXPECT_EQ(f.size(), 3u);
  EXPECT_NEAR(std::abs(f.mean()), std::abs(std::complex<double>(0, 1.0 / 3)),
              1e-12);
  EXPECT_NEAR(f.l2_norm(), 1.0, 1e-12);
  EXPECT_NEAR(f.max_abs(), 1.0, 1e-12);
  EXPECT_TRUE(f.all_finite());

  const TableFunction g = f.scaled(2.0).conjugated();
  EXPECT_NEAR(g[1].imag(), -2.0, 1e-12);
  const TableFunction sum = f.plus(g);
  EXPECT_NEAR(sum[1].imag(), -1.0, 1e-12);
  EXPECT_NEAR(f.minus(f).l2_norm(), 0.0, 1e-12);
  // inner_product conjugates its second argument
  EXPECT_NEAR(f.inner_product(f).real(), 1.0, 1e-12);
  EXPECT_NEAR(f.times(f.conjugated()).mean().real(), 1.0, 1e-12);
}

TEST(TableFunction, ShiftWraps) {
  TableFunction f(3, 2);
  for (std::uint64_t i = 0; i < 9; ++i) f[i] = static_cast<double>(i);
  const TableFunction s = f.shifted({0, 1});
  EXPECT_NEAR(s[0].real(), 1.0, 1e-12);  // f((0,0)+(0,1)) = f index 1
  EXPECT_NEAR(s[2].real(), 0.0, 1e-12);  // (0,2)+(0,1) wraps to (0,0)
  EXPECT_NEAR(s[5].real(), 3.0, 1e-12);  // (1,2)+(0,1) -> (1,0) index 3
}

TEST(TableFunction, PairwiseSumMatchesOrderedSum) {
  Rng rng(17);
  std::vector<std::complex<double>> xs;
  std::complex<double> direct = 0.0;
  for (int i = 0; i < 1003; ++i) {
    const std::complex<double> v(rng.unit_real() - 0.5, rng.unit_real() - 0.5);
    xs.push_back(v);
    direct += v;
  }
  EXPECT_NEAR(std::abs(pairwise_sum(xs.data(), xs.size()) - direct), 0.0,
              1e-9);
}

TEST(Rng, DeterministicAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.next(), b.next());
  }
  Rng r(1);
  for (int i = 0; i < 200; ++i) {
    EXPECT_LT(r.below(7), 7u);
    const auto res = r.residue(5);
    EXPECT_GE(res, 0);
    EXPECT_LT(res, 5);
    EXPECT_NE(r.nonzero_residue(3), 0);
    const double u = r.unit_real();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  const Point pt = r.point(3, 4);
  EXPECT_EQ(pt.size(), 4u);
}

TEST(Limits, BudgetGuard) {
  Limits& lim = limits();
  const std::uint64_t saved = lim.point_budget;
  lim.point_budget = 1000;
  EXPECT_NO_THROW(charge(1000));
  try {
    charge(1001);
    FAIL() << "charge above budget must throw";
  } catch (const BudgetError& e) {
    EXPECT_EQ(e.estimated, 1001u);
    EXPECT_EQ(e.cap, 1000u);
  }
  lim.point_budget = saved;
}

TEST(Limits, ResolvedThreads) {
  Limits& lim = limits();
  const int saved = lim.threads;
  lim.threads = 3;
  EXPECT_EQ(resolved_threads(), 3);
  lim.threads = 0;
  EXPECT_GE(resolved_threads(), 1);
  lim.threads = saved;
}

}  // namespace
}  // namespace fplab
