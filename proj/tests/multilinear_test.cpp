#include <algorithm>

#include <gtest/gtest.h>

#include "fplab/field.hpp"
#include "fplab/multilinear.hpp"
#include "fplab/polynomial.hpp"
#include "fplab/random.hpp"

namespace fplab {
namespace {

TEST(MultisetIndex, Orderings) {
  MultisetIndex v;
  v.entries = {0, 0, 1};
  EXPECT_EQ(v.size(), 3);
  EXPECT_EQ(v.multiplicity(0), 2);
  EXPECT_EQ(v.multiplicity(1), 1);
  EXPECT_EQ(v.distinct(), (std::vector<int>{0, 1}));
  EXPECT_EQ(v.orderings(), 3u);  // 3!/2!
  const MultisetIndex w = v.remove_one(0);
  EXPECT_EQ(w.entries, (std::vector<int>{0, 1}));
}

TEST(MultisetIndex, EnumerationCount) {
  // multisets of size 2 from 3 symbols: C(4,2) = 6
  EXPECT_EQ(multisets_of_size(3, 2).size(), 6u);
  EXPECT_EQ(multisets_of_size(2, 3).size(), 4u);
}

TEST(DerivedForm, ProductFormGolden) {
  // pi = x1 x2 over F_3^2 derives kappa(h, h') = h1 h'2 + h2 h'1.
  const MultilinearForm kappa =
      MultilinearForm::derived_from(parse_polynomial("x1*x2", 3, 2), 2);
  const PrimeModulus mod(3);
  for (std::uint64_t a = 0; a < 9; ++a) {
    for (std::uint64_t b = 0; b < 9; ++b) {
      const Point h = decode_point(3, a, 2);
      const Point hp = decode_point(3, b, 2);
      const std::int32_t expected = mod.reduce(
          std::int64_t(h[0]) * hp[1] + std::int64_t(h[1]) * hp[0]);
      EXPECT_EQ(kappa.eval({h, hp}), expected);
    }
  }
  const RankValue rank = analytic_rank(kappa);
  EXPECT_EQ(rank.kernel_count, 1u);
  EXPECT_EQ(rank.domain_size, 9u);
  EXPECT_NEAR(rank.rank(), 2.0, 1e-12);
}

TEST(DerivedForm, TrilinearDiagonalRank) {
  // pi = x^3 over F_5 derives kappa = 6 h h' h''; kernel pairs have
  // h' h'' = 0, so 9 of 25.
  const MultilinearForm kappa =
      MultilinearForm::derived_from(parse_polynomial("x1^3", 5, 1), 3);
  const RankValue rank = analytic_rank(kappa);
  EXPECT_EQ(rank.kernel_count, 9u);
  EXPECT_EQ(rank.domain_size, 25u);
  EXPECT_EQ(rank.alpha(), Rational(9, 25));
}

TEST(DerivedForm, LowerOrderTermsVanish) {
  // Degree-d differencing kills everything below degree d.
  const MultilinearForm kappa = MultilinearForm::derived_from(
      parse_polynomial("x1^2+3*x1+4", 5, 1), 3);
  EXPECT_TRUE(kappa.is_zero());
}

TEST(DerivedForm, ContractProperties) {
  Rng rng(12);
  const Polynomial pi = parse_polynomial("x1^2*x2+2*x2^2+x1", 5, 2);
  const MultilinearForm kappa = MultilinearForm::derived_from(pi, 3);
  const PrimeModulus mod(5);
  for (int t = 0; t < 50; ++t) {
    std::vector<Point> args = {rng.point(5, 2), rng.point(5, 2),
                               rng.point(5, 2)};
    // symmetry under a transposition
    std::vector<Point> swapped = {args[1], args[0], args[2]};
    EXPECT_EQ(kappa.eval(args), kappa.eval(swapped));
    // additivity in the first slot
    const Point u = rng.point(5, 2);
    std::vector<Point> shifted = args;
    shifted[0] = mod.add(args[0], u);
    std::vector<Point> other = args;
    other[0] = u;
    EXPECT_EQ(kappa.eval(shifted),
              mod.add(kappa.eval(args), kappa.eval(other)));
    // base point independence
    EXPECT_EQ(kappa.eval_from_source(args, rng.point(5, 2)),
              kappa.eval(args));
  }
}

TEST(DerivedForm, CanonicalMonomialMatchesDerived) {
  // For the pure power s = d the canonical s-linear form ties out with the
  // derived one.
  const Polynomial pi = parse_polynomial("x1^2", 5, 1);
  const MultilinearForm derived = MultilinearForm::derived_from(pi, 2);
  const MultilinearForm canonical =
      MultilinearForm::canonical_monomial_form(pi, 2);
  Rng rng(3);
  const PrimeModulus mod(5);
  for (int t = 0; t < 20; ++t) {
    const std::vector<Point> args = {rng.point(5, 1), rng.point(5, 1)};
    // derived = s! * canonical
    EXPECT_EQ(derived.eval(args), mod.mul(2, canonical.eval(args)));
  }
}

TEST(DerivedForm, ZeroAndD1Conventions) {
  const MultilinearForm zero(3, 2, 2);
  EXPECT_TRUE(zero.is_zero());
  const RankValue rz = analytic_rank(zero);
  EXPECT_EQ(rz.kernel_count, rz.domain_size);
  EXPECT_NEAR(rz.rank(), 0.0, 1e-12);

  const MultilinearForm linear =
      MultilinearForm::derived_from(parse_polynomial("x1", 3, 2), 1);
  const RankValue rl = analytic_rank(linear);
  EXPECT_EQ(rl.domain_size, 1u);
  EXPECT_EQ(rl.kernel_count, 0u);  // nonzero linear form never vanishes
  EXPECT_TRUE(rl.rank_infinite());
}

TEST(DerivedForm, BindLastRestriction) {
  const MultilinearForm kappa = MultilinearForm::derived_from(
      parse_polynomial("x1^2*x2", 3, 2), 3);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const Point y = rng.point(3, 2);
    const MultilinearForm bound = kappa.bind_last(y);
    const std::vector<Point> args = {rng.point(3, 2), rng.point(3, 2)};
    std::vector<Point> whole = args;
    whole.push_back(y);
    EXPECT_EQ(bound.eval(args), kappa.eval(whole));
  }
}

TEST(DerivedForm, DiagonalRecoversValues) {
  const Polynomial pi = parse_polynomial("x1^2+x1*x2", 5, 2);
  const MultilinearForm kappa = MultilinearForm::derived_from(pi, 2);
  const Polynomial diag = kappa.diagonal();
  // kappa(x, x) = 2 * (top homogeneous part of pi)
  const Polynomial expected = pi.homogeneous_component(2).scaled(2);
  EXPECT_EQ(diag, expected);
}

TEST(DerivedForm, ScaledPlusEval) {
  const MultilinearForm a =
      MultilinearForm::derived_from(parse_polynomial("x1*x2", 3, 2), 2);
  const MultilinearForm b =
      MultilinearForm::derived_from(parse_polynomial("x1^2", 3, 2), 2);
  const MultilinearForm combo = a.scaled(2).plus(b);
  const PrimeModulus mod(3);
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const std::vector<Point> args = {rng.point(3, 2), rng.point(3, 2)};
    EXPECT_EQ(combo.eval(args),
              mod.add(mod.mul(2, a.eval(args)), b.eval(args)));
  }
}

TEST(Rank, ValueCensusMatchesKernelDensity) {
  const MultilinearForm kappa =
      MultilinearForm::derived_from(parse_polynomial("x1*x2", 3, 2), 2);
  const auto census = value_census(kappa);
  // E omega^kappa = alpha = 1/9: residues must balance off the kernel.
  ASSERT_TRUE(census.exact_real_mean().has_value());
  EXPECT_EQ(*census.exact_real_mean(), analytic_rank(kappa).alpha());
}

TEST(Rank, RestrictionProfileExactIdentity) {
  Rng rng(21);
  for (int t = 0; t < 5; ++t) {
    Polynomial pi(3, 2);
    for (const auto& e :
         {std::vector<std::int32_t>{2, 1}, {1, 2}, {1, 1}}) {
      pi.add_term(e, rng.residue(3));
    }
    pi.add_term({2, 1}, 1);
    const MultilinearForm kappa = MultilinearForm::derived_from(pi, 3);
    const RestrictionProfile profile = restricted_rank_profile(kappa);
    std::uint64_t sum = 0;
    for (const auto& rv : profile.per_y) sum += rv.kernel_count;
    EXPECT_EQ(sum, profile.whole.kernel_count);
    EXPECT_EQ(profile.per_y.size(), domain_size(3, 2));
  }
}

TEST(BlockForms, PartialDerivativeShape) {
  const MultilinearForm kappa = MultilinearForm::derived_from(
      parse_polynomial("x1^2*x2", 5, 2), 3);
  MultisetIndex V;
  V.entries = {0, 0, 1};
  const PrimeModulus mod(5);
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    const Point y = rng.point(5, 2);
    const BlockPolynomial der = monomial_partial_derivative(kappa, V, y, 0);
    ASSERT_FALSE(der.terms.empty());
    // leading monomial: multiplicity factor 2, index V minus one 0
    EXPECT_EQ(der.terms.front().coeff, 2);
    EXPECT_EQ(der.terms.front().index, V.remove_one(0));
    // evaluates to mu_V(x) - mu_V(x - y e_0) on random block tuples
    for (int u = 0; u < 5; ++u) {
      const std::vector<Point> x = {rng.point(5, 2), rng.point(5, 2)};
      const std::int32_t whole = kappa.eval({x[0], x[0], x[1]});
      const Point x0s = mod.sub(x[0], y);
      const std::int32_t shifted = kappa.eval({x0s, x0s, x[1]});
      EXPECT_EQ(der.eval(x), mod.sub(whole, shifted));
    }
  }
}

TEST(BlockForms, AbsentSlotGivesEmptyDerivative) {
  const MultilinearForm kappa =
      MultilinearForm::derived_from(parse_polynomial("x1^2", 3, 1), 2);
  MultisetIndex V;
  V.entries = {0, 0};
  const BlockPolynomial der =
      monomial_partial_derivative(kappa, V, {1}, 1);  // slot 1 not in V
  EXPECT_TRUE(der.terms.empty());
}

TEST(BlockForms, BlockPolynomialEval) {
  const MultilinearForm kappa =
      MultilinearForm::derived_from(parse_polynomial("x1*x2", 3, 2), 2);
  MultisetIndex index;
  index.entries = {0, 1};
  const BlockMonomial mono{index, kappa, 2};
  BlockPolynomial poly;
  poly.terms = {mono, mono};
  const PrimeModulus mod(3);
  const std::vector<Point> x = {{1, 2}, {2, 1}};
  const std::int32_t single = mod.mul(2, kappa.eval(x));
  EXPECT_EQ(poly.eval(x), mod.add(single, single));
}

}  // namespace
}  // namespace fplab
