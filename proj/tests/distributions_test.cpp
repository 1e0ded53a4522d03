#include <gtest/gtest.h>

#include <cmath>

#include "pfcycles/distributions.hpp"
#include "pfcycles/errors.hpp"
#include "pfcycles/moments.hpp"
#include "pfcycles/stein.hpp"

using namespace pfcycles;

namespace {

ExactRational q(long num, long den = 1) { return ratio(num, den); }

// Exact TV to the product-Poisson law, frozen from an independent
// high-precision evaluation over brute-force profile counts.
struct TvCase {
  int n;
  int d;
  double tv;
};
const TvCase kTv[] = {
    {1, 1, 0.63212055882855768}, {2, 1, 0.14939361274761217}, {2, 2, 0.55373967970314034},
    {3, 1, 0.074367598047596131}, {3, 2, 0.27998623960418712}, {4, 1, 0.064180838242836518},
    {4, 2, 0.18098623960418712}, {5, 1, 0.050804295032959974}, {5, 2, 0.15035660997455749},
    {6, 1, 0.043052022868290198}, {6, 2, 0.12557884982611846}, {7, 1, 0.037223501817055268},
    {7, 2, 0.10602078550262462},
};

}  // namespace

TEST(Poisson, Pmf) {
  EXPECT_NEAR(static_cast<double>(poisson_pmf(1.0L, 0)), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(static_cast<double>(poisson_pmf(q(1, 2), 1)), 0.5 * std::exp(-0.5), 1e-15);
  EXPECT_NEAR(static_cast<double>(poisson_pmf(q(1), 3)), std::exp(-1.0) / 6, 1e-15);
  // Large j stays accurate relative to the log-gamma form.
  const long double big = poisson_pmf(q(1, 3), 150);
  const long double ref = std::exp(-1.0L / 3 + 150 * std::log(1.0L / 3) - std::lgamma(151.0L));
  EXPECT_NEAR(static_cast<double>(big / ref), 1.0, 1e-12);
  EXPECT_THROW(poisson_pmf(q(0), 1), std::invalid_argument);

  EXPECT_NEAR(static_cast<double>(product_poisson_pmf(std::vector<int>{0})), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(static_cast<double>(product_poisson_pmf(std::vector<int>{0, 0})), std::exp(-1.5), 1e-15);
  EXPECT_NEAR(static_cast<double>(product_poisson_pmf(std::vector<int>{1, 1})), 0.5 * std::exp(-1.5), 1e-15);
}

TEST(JointDistribution, ExactSmallCases) {
  const JointDistribution one = exact_joint_distribution(1, 1);
  EXPECT_EQ(one.support(), (std::vector<CountVector>{{1}}));
  EXPECT_EQ(*one.exact_probability({1}), 1);

  const JointDistribution two = exact_joint_distribution(2, 1);
  for (const CountVector& w : {CountVector{0}, CountVector{1}, CountVector{2}}) {
    EXPECT_EQ(*two.exact_probability(w), q(1, 3));
  }
  const JointDistribution two2 = exact_joint_distribution(2, 2);
  EXPECT_EQ(two2.support(), (std::vector<CountVector>{{0, 1}, {1, 0}, {2, 0}}));
  EXPECT_EQ(*two2.exact_probability({0, 1}), q(1, 3));
  EXPECT_EQ(*two2.exact_probability({1, 1}), 0);
  EXPECT_EQ(two2.kind(), JointDistribution::Kind::exact);
  EXPECT_STREQ(to_string(two2.kind()), "exact");
}

TEST(JointDistribution, Validation) {
  EXPECT_THROW(JointDistribution::exact(2, 1, {{{0}, q(1, 2)}}), std::invalid_argument);
  EXPECT_THROW(JointDistribution::exact(2, 1, {{{3}, q(1)}}), std::invalid_argument);
  EXPECT_THROW(JointDistribution::exact(2, 1, {{{1, 0}, q(1)}}), std::invalid_argument);
  EXPECT_THROW(JointDistribution::exact(2, 1, {{{0}, q(3, 2)}, {{1}, q(-1, 2)}}), std::invalid_argument);
  EXPECT_THROW(JointDistribution::empirical(2, 1, {{{0}, 0}}), std::invalid_argument);
  EXPECT_THROW(exact_joint_distribution(3, 4), std::invalid_argument);
  EXPECT_THROW(exact_joint_distribution(kExactDistributionGuard + 1, 1), GuardError);
}

TEST(JointDistribution, MarginalsAndMeansAreConsistent) {
  for (int n = 2; n <= 7; ++n) {
    const JointDistribution two = exact_joint_distribution(n, 2);
    const JointDistribution one = exact_joint_distribution(n, 1);
    const JointDistribution m = two.marginal(1);
    EXPECT_EQ(m.support(), one.support());
    for (const auto& w : one.support()) EXPECT_EQ(*m.exact_probability(w), *one.exact_probability(w));
    for (int k = 1; k <= 2; ++k) EXPECT_EQ(*two.exact_mean(k), expected_k_cycles_exact(n, k));
  }
  const JointDistribution full = exact_joint_distribution(6, 6, false, 3);
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(*full.exact_mean(k), expected_k_cycles_exact(6, k));
}

TEST(TotalVariation, PoissonExactValues) {
  for (const auto& c : kTv) {
    EXPECT_NEAR(tv_distance_to_poisson(exact_joint_distribution(c.n, c.d)), c.tv, 1e-13) << c.n << "," << c.d;
  }
  const double tv71 = tv_distance_to_poisson(exact_joint_distribution(7, 1));
  EXPECT_LE(tv71, std::min(1.0, tv_upper_bound(7, 1).get_d()));
  EXPECT_LT(tv71, 0.1);
}

TEST(TotalVariation, PointMassAndSelfCheck) {
  const JointDistribution zero = JointDistribution::exact(3, 1, {{{0}, q(1)}});
  EXPECT_NEAR(tv_distance_to_poisson(zero), 1 - std::exp(-1.0), 1e-15);

  // Poisson(1) itself, as counts on 0..40: only rounding of the counts remains.
  std::map<CountVector, std::uint64_t> counts;
  for (int j = 0; j <= 40; ++j) {
    const auto c = static_cast<std::uint64_t>(std::llround(1e15L * poisson_pmf(1.0L, j)));
    if (c > 0) counts[{j}] = c;
  }
  EXPECT_LT(tv_distance_to_poisson(JointDistribution::empirical(40, 1, counts)), 1e-9);
}

TEST(TotalVariation, PairwiseDistance) {
  const JointDistribution a = exact_joint_distribution(5, 2);
  const JointDistribution b = exact_joint_distribution(6, 2);
  const JointDistribution c = exact_joint_distribution(7, 2);
  EXPECT_EQ(tv_distance(a, a), 0.0);
  EXPECT_DOUBLE_EQ(tv_distance(a, b), tv_distance(b, a));
  EXPECT_LE(tv_distance(a, c), tv_distance(a, b) + tv_distance(b, c) + 1e-15);
  const JointDistribution p = JointDistribution::exact(2, 1, {{{0}, q(1)}});
  const JointDistribution r = JointDistribution::exact(2, 1, {{{2}, q(1)}});
  EXPECT_EQ(tv_distance(p, r), 1.0);
  EXPECT_THROW(tv_distance(a, exact_joint_distribution(5, 1)), std::invalid_argument);
  for (const auto& d : {a, b, c}) {
    const double t = tv_distance_to_poisson(d);
    EXPECT_GE(t, 0.0);
    EXPECT_LE(t, 1.0);
  }
}

TEST(Empirical, TrivialAndReproducible) {
  const JointDistribution one = empirical_joint_distribution(1, 1, {500, 1, 2});
  EXPECT_EQ(one.support(), (std::vector<CountVector>{{1}}));
  EXPECT_EQ(one.probability({1}), 1.0L);
  EXPECT_EQ(one.sample_count(), 500u);

  const SamplingPlan plan{20000, 8, 3};
  const JointDistribution x = empirical_joint_distribution(1000, 3, plan);
  const JointDistribution y = empirical_joint_distribution(1000, 3, plan);
  EXPECT_NEAR(static_cast<double>(x.total_mass()), 1.0, 1e-12);
  EXPECT_EQ(x.seed(), 8u);
  EXPECT_EQ(to_csv(x), to_csv(y));
  EXPECT_EQ(x.kind(), JointDistribution::Kind::empirical);
  EXPECT_FALSE(x.exact_probability(x.support().front()));
}

TEST(Empirical, CloseToExactAtSevenTwo) {
  const JointDistribution exact = exact_joint_distribution(7, 2);
  const JointDistribution emp = empirical_joint_distribution(7, 2, {300000, 31, 4});
  for (const auto& w : exact.support()) {
    EXPECT_NEAR(static_cast<double>(emp.probability(w)), static_cast<double>(exact.probability(w)), 0.005);
  }
  EXPECT_LT(tv_distance(exact, emp), 0.01);
}

TEST(Csv, Format) {
  EXPECT_EQ(to_csv(exact_joint_distribution(2, 2)), "w,mass\n0;1,1/3\n1;0,1/3\n2;0,1/3\n");
  EXPECT_EQ(format_count_vector({3, 0, 1}), "3;0;1");
}
