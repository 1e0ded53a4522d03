#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pfcycles/structure.hpp"

using namespace pfcycles;

namespace {
const PrefSeq kFigure({6, 1, 2, 4, 1, 9, 1, 6, 8, 4, 2, 10});

PrefSeq identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return PrefSeq(v);
}
}  // namespace

TEST(FunctionalGraph, FigureExample) {
  const FunctionalGraph g(kFigure);
  EXPECT_EQ(g.cycle_count(), 2);
  EXPECT_TRUE(g.on_cycle(4));
  for (int a : {6, 9, 8}) {
    EXPECT_TRUE(g.on_cycle(a));
    EXPECT_EQ(g.cycle_length(a), 3);
  }
  EXPECT_EQ(g.tail_length(12), 2);
  EXPECT_EQ(g.root(12), 4);
  EXPECT_EQ(g.tail_length(5), 2);
  EXPECT_EQ(g.root(5), 6);
  EXPECT_EQ(g.component_of(5), *g.cycle_id(6));
  EXPECT_FALSE(g.cycle_length(12));

  EXPECT_EQ(cycle_length_at(kFigure, 9), 3);
  EXPECT_FALSE(cycle_length_at(kFigure, 12));
  EXPECT_EQ(tail_length_at(kFigure, 11), 3);
  EXPECT_EQ(tail_length_at(kFigure, 4), 0);
  EXPECT_THROW(tail_length_at(kFigure, 13), std::out_of_range);
  EXPECT_THROW(cycle_length_at(kFigure, 0), std::out_of_range);

  const CycleProfile p = cycle_profile(kFigure);
  EXPECT_EQ(p.count(1), 1);
  EXPECT_EQ(p.count(3), 1);
  EXPECT_EQ(p.total, 2);
  EXPECT_EQ(p.truncated(4), (std::vector<int>{1, 0, 1, 0}));
}

TEST(FunctionalGraph, SmallCases) {
  for (int n : {1, 4, 9}) {
    const FunctionalGraph g(identity(n));
    for (int a = 1; a <= n; ++a) EXPECT_TRUE(g.on_cycle(a));
    EXPECT_EQ(cycle_profile(identity(n)).count(1), n);
    EXPECT_EQ(cycle_profile(identity(n)).total, n);
    EXPECT_EQ(cycle_length_at(identity(n), n), 1);
  }
  const PrefSeq ones({1, 1});
  EXPECT_EQ(cycle_length_at(ones, 1), 1);
  EXPECT_EQ(tail_length_at(ones, 2), 1);
  const CycleProfile swap = cycle_profile(PrefSeq({2, 1}));
  EXPECT_EQ(swap.count(2), 1);
  EXPECT_EQ(swap.total, 1);
  EXPECT_EQ(swap.truncated(3), (std::vector<int>{0, 1, 0}));
}

TEST(FunctionalGraph, CyclePositionsFollowSuccessors) {
  const FunctionalGraph g(kFigure);
  for (int a = 1; a <= 12; ++a) {
    if (!g.on_cycle(a)) {
      EXPECT_FALSE(g.cycle_position(a));
      continue;
    }
    const int len = *g.cycle_length(a);
    EXPECT_EQ((*g.cycle_position(a) + 1) % len, *g.cycle_position(g.successor(a)));
  }
}

// All of [n]^n, every vertex, against naive orbit iteration.
TEST(FunctionalGraph, MatchesNaiveOracleExhaustively) {
  for (int n = 1; n <= 6; ++n) {
    CycleCounter counter(n);
    oracle::for_each_word(n, n, [&](const oracle::Word& w) {
      const FunctionalGraph g(w);
      for (int a = 1; a <= n; ++a) {
        const int len = oracle::cycle_length_naive(w, a);
        ASSERT_EQ(g.cycle_length(a).value_or(0), len);
        ASSERT_EQ(g.tail_length(a), oracle::tail_length_naive(w, a));
      }
      const auto naive = oracle::cycle_counts_naive(w);
      const CycleProfile p = g.profile();
      ASSERT_EQ(p.counts, naive);
      ASSERT_EQ(p.total, std::accumulate(naive.begin(), naive.end(), 0));
      ASSERT_EQ(counter.scan(w), p.total);
      ASSERT_EQ(counter.counts(), naive);
    });
  }
}

TEST(FunctionalGraph, PermutationsHaveNoTails) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      const FunctionalGraph g(perm);
      int weighted = 0;
      const CycleProfile p = g.profile();
      for (int k = 1; k <= n; ++k) weighted += k * p.count(k);
      ASSERT_EQ(weighted, n);
      for (int a = 1; a <= n; ++a) ASSERT_EQ(g.tail_length(a), 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(FunctionalGraph, ProfileInvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    std::vector<int> f(static_cast<std::size_t>(n)), sigma(static_cast<std::size_t>(n));
    for (auto& x : f) x = 1 + static_cast<int>(rng() % n);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    // g = sigma o f o sigma^-1, i.e. g(sigma(i)) = sigma(f(i)).
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) g[sigma[i - 1] - 1] = sigma[f[i - 1] - 1];
    ASSERT_EQ(cycle_profile(f), cycle_profile(g));
  }
}

TEST(FunctionalGraph, RejectsOutOfRange) {
  EXPECT_THROW(FunctionalGraph(std::vector<int>{1, 3}), std::invalid_argument);
}
