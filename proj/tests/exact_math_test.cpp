#include <gtest/gtest.h>

#include <vector>

#include "pfcycles/exact_math.hpp"

using namespace pfcycles;

namespace {

ExactRational q(long num, long den = 1) { return ratio(num, den); }

std::vector<ExactRational> xs(std::initializer_list<long> values) {
  std::vector<ExactRational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST(ExactMath, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(to_string(factorial(25)), "15511210043330985984000000");
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  for (unsigned n = 1; n <= 30; ++n) {
    for (long k = 1; k <= static_cast<long>(n); ++k) {
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST(ExactMath, Multinomial) {
  const std::vector<unsigned> parts{2, 1, 1};
  EXPECT_EQ(multinomial(4, parts), 12);
  const std::vector<unsigned> empty;
  EXPECT_EQ(multinomial(0, empty), 1);
  const std::vector<unsigned> bad{1, 1};
  EXPECT_THROW(multinomial(3, bad), std::invalid_argument);
}

TEST(ExactMath, SignedPower) {
  EXPECT_EQ(signed_power(q(3), 4), q(81));
  EXPECT_EQ(signed_power(q(2), -3), q(1, 8));
  EXPECT_EQ(signed_power(q(-2, 3), -1), q(-3, 2));
  EXPECT_EQ(signed_power(q(0), 0), q(1));
  EXPECT_EQ(signed_power(q(0), 5), q(0));
  EXPECT_THROW(signed_power(q(0), -1), std::domain_error);
}

TEST(ExactMath, RatioIsCanonical) {
  const ExactRational r = ratio(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_THROW(ratio(1, 0), std::domain_error);
}

TEST(ExactMath, TextRoundTrip) {
  EXPECT_EQ(to_string(q(3, 6)), "1/2");
  EXPECT_EQ(to_string(q(-4, 2)), "-2");
  EXPECT_EQ(parse_rational("10/4"), q(5, 2));
  EXPECT_EQ(parse_rational("-7"), q(-7));
  for (const char* text : {"0", "1", "-3/7", "123456789012345678901234567891/1000"}) {
    EXPECT_EQ(to_string(parse_rational(text)), text);
  }
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(ExactMath, LongDoubleConversion) {
  EXPECT_DOUBLE_EQ(static_cast<double>(to_long_double(q(1, 3))), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(static_cast<double>(to_long_double(q(-7, 2))), -3.5);
  const ExactRational huge = ratio(BigInt("100000000000000000000000000001"), BigInt("300000000000000000000000000000"));
  EXPECT_NEAR(static_cast<double>(to_long_double(huge)), 1.0 / 3.0, 1e-15);
}

TEST(ExactMath, CompositionsAreLexicographicAndComplete) {
  std::vector<std::vector<unsigned>> seen;
  for_each_composition(3, 3, [&](std::span<const unsigned> s) { seen.emplace_back(s.begin(), s.end()); });
  ASSERT_EQ(seen.size(), 10u);  // C(5, 2)
  EXPECT_EQ(seen.front(), (std::vector<unsigned>{0, 0, 3}));
  EXPECT_EQ(seen.back(), (std::vector<unsigned>{3, 0, 0}));
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  for (const auto& s : seen) EXPECT_EQ(s[0] + s[1] + s[2], 3u);

  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned m = 1; m <= 4; ++m) {
      unsigned long count = 0;
      for_each_composition(n, m, [&](std::span<const unsigned>) { ++count; });
      EXPECT_EQ(BigInt(count), binomial(n + m - 1, m - 1)) << n << " " << m;
    }
  }
  unsigned long empty = 0;
  for_each_composition(0, 0, [&](std::span<const unsigned>) { ++empty; });
  for_each_composition(2, 0, [&](std::span<const unsigned>) { ++empty; });
  EXPECT_EQ(empty, 1u);
}

TEST(Abel, KnownValues) {
  EXPECT_EQ(abel_sum({2, xs({1, 1}), {-1, -1}}), q(8));
  EXPECT_EQ(abel_sum({2, xs({1, 1, 1}), {-1, -1, 0}}), q(25));
  EXPECT_EQ(abel_sum({3, xs({1, 2}), {-1, -1}}), q(54));
  EXPECT_EQ(abel_sum({1, xs({2, 1}), {-1, 0}}), q(2));
  // m = 1 collapses to a single term.
  EXPECT_EQ(abel_sum({4, xs({3}), {-1}}), q(343));
}

TEST(Abel, ClosedFormsAgreeWithDirectSum) {
  for (unsigned n = 0; n <= 5; ++n) {
    for (long a = 1; a <= 3; ++a) {
      for (long b = 1; b <= 3; ++b) {
        const auto x2 = xs({a, b});
        EXPECT_EQ(abel_sum({n, x2, {-1, -1}}), abel_closed_all_minus_one(n, x2));
        EXPECT_EQ(abel_sum({n, x2, {-1, 0}}), abel_closed_last_zero(n, x2));
        const auto x3 = xs({a, b, a + b});
        EXPECT_EQ(abel_sum({n, x3, {-1, -1, -1}}), abel_closed_all_minus_one(n, x3));
        EXPECT_EQ(abel_sum({n, x3, {-1, -1, 0}}), abel_closed_last_zero(n, x3));
      }
    }
  }
  // Rational arguments too.
  const std::vector<ExactRational> xr{q(1, 2), q(3, 4), q(5, 3)};
  EXPECT_EQ(abel_sum({4, xr, {-1, -1, -1}}), abel_closed_all_minus_one(4, xr));
  EXPECT_EQ(abel_sum({4, xr, {-1, -1, 0}}), abel_closed_last_zero(4, xr));
}

TEST(Abel, SymmetryUnderJointPermutation) {
  const std::vector<long> p{-1, 0, 2};
  const auto x = xs({1, 2, 4});
  const ExactRational base = abel_sum({4, x, p});
  EXPECT_EQ(abel_sum({4, xs({4, 2, 1}), {2, 0, -1}}), base);
  EXPECT_EQ(abel_sum({4, xs({2, 1, 4}), {0, -1, 2}}), base);
}

// sum_i A_{n-1}(.., x_i + 1, ..; .., p_i + 1, ..) = A_n(x; p).
TEST(Abel, ShiftRecurrence) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (const std::vector<long>& p : {std::vector<long>{-1, -1}, {-1, 0}, {0, 1}, {-1, -1, 0}, {1, -1, 2}}) {
      std::vector<ExactRational> x;
      for (std::size_t j = 0; j < p.size(); ++j) x.emplace_back(static_cast<long>(j) + 2);
      ExactRational sum = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        auto xi = x;
        auto pi = p;
        xi[i] += 1;
        pi[i] += 1;
        sum += abel_sum({n - 1, xi, pi});
      }
      EXPECT_EQ(sum, abel_sum({n, x, p})) << "n=" << n;
    }
  }
}

// A_n(x; p) = sum_s C(n,s) s! (x_1 + s) A_{n-s}(x_1 + s, x_2, ..; p_1 - 1, p_2, ..).
TEST(Abel, FirstCoordinateRecurrence) {
  for (unsigned n = 0; n <= 5; ++n) {
    const auto x = xs({1, 2, 3});
    const std::vector<long> p{-1, -1, 0};
    ExactRational sum = 0;
    for (unsigned s = 0; s <= n; ++s) {
      auto xs1 = x;
      xs1[0] += s;
      auto ps1 = p;
      ps1[0] -= 1;
      sum += ExactRational(binomial(n, s) * factorial(s)) * xs1[0] * abel_sum({n - s, xs1, ps1});
    }
    EXPECT_EQ(sum, abel_sum({n, x, p})) << "n=" << n;
  }
}

TEST(Abel, RejectsBadInput) {
  EXPECT_THROW(abel_sum({2, {}, {}}), std::invalid_argument);
  EXPECT_THROW(abel_sum({2, xs({1, 2}), {-1}}), std::invalid_argument);
  EXPECT_THROW(abel_closed_all_minus_one(2, xs({0, 1})), std::domain_error);
  const std::vector<ExactRational> none;
  EXPECT_THROW(abel_closed_last_zero(2, none), std::invalid_argument);
}

TEST(ExactMath, SmallExamples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(multinomial(2, std::vector<unsigned>{0, 2, 0}), 1);
  EXPECT_EQ(multinomial(2, std::vector<unsigned>{1, 1, 0}), 2);
  EXPECT_EQ(multinomial(6, std::vector<unsigned>{2, 2, 2}), 90);
  EXPECT_EQ(signed_power(q(1), -1), q(1));
  EXPECT_EQ(signed_power(q(3), 1), q(3));
  EXPECT_EQ(signed_power(q(2), -2), q(1, 4));
}

TEST(Abel, EmptyCompositionAndEdgeCases) {
  // n = 0 leaves the single empty composition: prod x_j^p_j.
  EXPECT_EQ(abel_sum({0, xs({2, 3}), {-1, 2}}), q(9, 2));
  EXPECT_EQ(abel_closed_all_minus_one(0, xs({1, 1})), q(1));
  EXPECT_EQ(abel_closed_last_zero(1, xs({2, 1})), q(2));
  // A_{n-1}(1, 1; -1, 0) = (n+1)^(n-1).
  for (unsigned n = 1; n <= 10; ++n) {
    const auto ones = xs({1, 1});
    BigInt expected = 1;
    for (unsigned i = 1; i < n; ++i) expected *= n + 1;
    EXPECT_EQ(abel_sum({n - 1, ones, {-1, 0}}), ExactRational(expected)) << n;
  }
}
