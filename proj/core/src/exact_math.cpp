#include "pfcycles/exact_math.hpp"

#include <numeric>
#include <stdexcept>

namespace pfcycles {

ExactRational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  ExactRational out(num, den);
  out.canonicalize();
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, long k) {
  if (k < 0 || k > static_cast<long>(n)) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

BigInt multinomial(unsigned n, std::span<const unsigned> parts) {
  unsigned long total = 0;
  for (unsigned p : parts) total += p;
  if (total != n) {
    throw std::invalid_argument("multinomial: parts sum to " + std::to_string(total) +
                                ", expected " + std::to_string(n));
  }
  // Product of binomials over running prefix sums avoids dividing factorials.
  BigInt out = 1;
  unsigned running = 0;
  for (unsigned p : parts) {
    running += p;
    out *= binomial(running, p);
  }
  return out;
}

ExactRational signed_power(const ExactRational& base, long exp) {
  if (exp == 0) return 1;
  if (base == 0) {
    if (exp < 0) throw std::domain_error("signed_power: zero base with negative exponent");
    return 0;
  }
  const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  ExactRational out = exp > 0 ? ExactRational(num, den) : ExactRational(den, num);
  out.canonicalize();
  return out;
}

std::string to_string(const ExactRational& value) { return value.get_str(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

ExactRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty input");
  ExactRational out;
  if (out.set_str(s, 10) != 0 || out.get_den() == 0) {
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  }
  out.canonicalize();
  return out;
}

double to_double(const ExactRational& value) { return value.get_d(); }

long double to_long_double(const ExactRational& value) {
  // mpq_get_d rounds to double; keep 64 extra fraction bits for long double.
  const BigInt num = abs(value.get_num());
  const BigInt scaled = (num << 64) / value.get_den();
  const BigInt high = scaled >> 64;
  const BigInt low = scaled - (high << 64);
  const long double magnitude =
      static_cast<long double>(high.get_d()) +
      static_cast<long double>(low.get_d()) / 18446744073709551616.0L;
  return value < 0 ? -magnitude : magnitude;
}

namespace {

ExactRational sum_of(std::span<const ExactRational> x) {
  ExactRational s = 0;
  for (const auto& v : x) s += v;
  return s;
}

ExactRational product_of_nonzero(std::span<const ExactRational> x, const char* who) {
  if (x.empty()) throw std::invalid_argument(std::string(who) + ": x must be non-empty");
  ExactRational prod = 1;
  for (const auto& v : x) {
    if (v == 0) throw std::domain_error(std::string(who) + ": every x_j must be nonzero");
    prod *= v;
  }
  return prod;
}

}  // namespace

ExactRational abel_sum(const AbelSpec& spec) {
  const std::size_t m = spec.x.size();
  if (m == 0) throw std::invalid_argument("abel_sum: x must be non-empty");
  if (spec.p.size() != m) throw std::invalid_argument("abel_sum: x and p differ in length");

  ExactRational total = 0;
  for_each_composition(spec.n, static_cast<unsigned>(m), [&](std::span<const unsigned> s) {
    ExactRational term = multinomial(spec.n, s);
    for (std::size_t j = 0; j < m; ++j) {
      term *= signed_power(spec.x[j] + s[j], static_cast<long>(s[j]) + spec.p[j]);
    }
    total += term;
  });
  return total;
}

ExactRational abel_closed_all_minus_one(unsigned n, std::span<const ExactRational> x) {
  const ExactRational prod = product_of_nonzero(x, "abel_closed_all_minus_one");
  const ExactRational sx = sum_of(x);
  return sx * signed_power(sx + n, static_cast<long>(n) - 1) / prod;
}

ExactRational abel_closed_last_zero(unsigned n, std::span<const ExactRational> x) {
  const ExactRational prod = product_of_nonzero(x, "abel_closed_last_zero");
  const ExactRational sx = sum_of(x);
  return x.back() * signed_power(sx + n, static_cast<long>(n)) / prod;
}

}  // namespace pfcycles
