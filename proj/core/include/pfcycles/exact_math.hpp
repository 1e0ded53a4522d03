#pragma once

// Exact integer/rational arithmetic and Abel multinomial sums.
//
// A_n(x; p) = sum over compositions s of n into m parts of
//             multinomial(n; s) * prod_j (s_j + x_j)^(s_j + p_j)

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pfcycles {

using BigInt = mpz_class;
using ExactRational = mpq_class;

/// num/den in canonical form. Throws std::domain_error when den == 0.
ExactRational ratio(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned n);

/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(unsigned n, long k);

/// n! / prod(parts_i!). Throws std::invalid_argument unless sum(parts) == n.
BigInt multinomial(unsigned n, std::span<const unsigned> parts);

/// Exact integer power with negative exponents allowed. 0^0 == 1.
/// Throws std::domain_error for a zero base with a negative exponent.
ExactRational signed_power(const ExactRational& base, long exp);

/// Canonical text form: "num/den", or "num" when the denominator is 1.
std::string to_string(const ExactRational& value);
std::string to_string(const BigInt& value);

/// Inverse of to_string. Accepts "a", "a/b", with optional sign.
ExactRational parse_rational(std::string_view text);

double to_double(const ExactRational& value);
long double to_long_double(const ExactRational& value);

/// Calls fn(std::span<const unsigned>) for every composition of n into m
/// non-negative parts, in lexicographic order of (s_1, ..., s_m).
template <typename Fn>
void for_each_composition(unsigned n, unsigned m, Fn&& fn) {
  if (m == 0) {
    if (n == 0) fn(std::span<const unsigned>{});
    return;
  }
  std::vector<unsigned> parts(m, 0);
  parts[m - 1] = n;
  while (true) {
    fn(std::span<const unsigned>(parts));
    // Rightmost i <= m-2 whose suffix parts[i+1..m-1] is non-empty in mass.
    unsigned suffix = 0;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(m) - 1;
    do {
      suffix += parts[static_cast<std::size_t>(i)];
      --i;
    } while (i >= 0 && suffix == 0);
    if (i < 0) return;
    ++parts[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j + 1 < m; ++j) parts[j] = 0;
    parts[m - 1] = suffix - 1;
  }
}

struct AbelSpec {
  unsigned n = 0;
  std::vector<ExactRational> x;
  std::vector<long> p;
};

/// Direct summation over all compositions. Throws std::invalid_argument on
/// size mismatch or empty x, std::domain_error when a zero base meets a
/// negative exponent.
ExactRational abel_sum(const AbelSpec& spec);

/// A_n(x; -1, ..., -1) = (sum x)(sum x + n)^(n-1) / prod x.
ExactRational abel_closed_all_minus_one(unsigned n, std::span<const ExactRational> x);

/// A_n(x; -1, ..., -1, 0) = x_m (sum x + n)^n / prod x.
ExactRational abel_closed_last_zero(unsigned n, std::span<const ExactRational> x);

}  // namespace pfcycles
