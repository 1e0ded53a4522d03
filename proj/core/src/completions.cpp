#include "pfcycles/completions.hpp"

#include <stdexcept>

#include "pfcycles/errors.hpp"
#include "pfcycles/parking.hpp"
#include "pfcycles/sharding.hpp"

namespace pfcycles {

OccupiedVector::OccupiedVector(int n, std::vector<int> spots) : n_(n), spots_(std::move(spots)) {
  if (n_ < 1) throw std::invalid_argument("OccupiedVector: n must be at least 1");
  int previous = 0;
  for (int v : spots_) {
    if (v <= previous || v > n_) {
      throw std::invalid_argument("OccupiedVector: spots must be strictly increasing within [1, n]");
    }
    previous = v;
  }
}

OccupiedVector OccupiedVector::block(int n, int start, int length) {
  if (length < 0 || start < 0 || start + length > n) {
    throw std::invalid_argument("OccupiedVector::block: block out of range");
  }
  std::vector<int> spots(static_cast<std::size_t>(length));
  for (int j = 0; j < length; ++j) spots[j] = start + j + 1;
  return OccupiedVector(n, std::move(spots));
}

namespace {

// Lower bound on s_1 + ... + s_i (1-based i) imposed by the occupied spot v_i.
int prefix_floor(const OccupiedVector& occ, int i) { return occ.spots()[i - 1] - i; }

void lattice_descend(const OccupiedVector& occ, std::vector<unsigned>& s, int part, int used,
                     int total, const std::function<void(std::span<const unsigned>)>& visit) {
  const int l = occ.size();
  if (part == l) {
    s[part] = static_cast<unsigned>(total - used);
    visit(std::span<const unsigned>(s));
    return;
  }
  const int need = std::max(0, prefix_floor(occ, part + 1) - used);
  for (int value = need; used + value <= total; ++value) {
    s[part] = static_cast<unsigned>(value);
    lattice_descend(occ, s, part + 1, used + value, total, visit);
  }
}

// (s+1)^(s-1) for s = 0..max; an integer for every s >= 0.
std::vector<BigInt> tree_weights(int max) {
  std::vector<BigInt> w(static_cast<std::size_t>(max) + 1);
  w[0] = 1;
  for (int s = 1; s <= max; ++s) {
    mpz_ui_pow_ui(w[s].get_mpz_t(), static_cast<unsigned long>(s) + 1,
                  static_cast<unsigned long>(s) - 1);
  }
  return w;
}

}  // namespace

void for_each_lattice_point(const OccupiedVector& occ,
                            const std::function<void(std::span<const unsigned>)>& visit) {
  const int total = occ.n() - occ.size();
  std::vector<unsigned> s(static_cast<std::size_t>(occ.size()) + 1, 0);
  lattice_descend(occ, s, 0, 0, total, visit);
}

std::vector<LatticePoint> lattice_points(const OccupiedVector& occ) {
  std::vector<LatticePoint> out;
  for_each_lattice_point(occ, [&](std::span<const unsigned> s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

BigInt completions_count(const OccupiedVector& occ) {
  const int l = occ.size();
  const int cars = occ.n() - l;
  const auto weight = tree_weights(cars);

  // prefix[t]: sum over admissible (s_1..s_j) with s_1+..+s_j = t of
  // prod_i C(s_1+..+s_i, s_i) (s_i+1)^(s_i-1).
  std::vector<BigInt> prefix(static_cast<std::size_t>(cars) + 1, 0);
  std::vector<BigInt> next(prefix.size());
  prefix[0] = 1;
  for (int j = 1; j <= l; ++j) {
    const int floor = std::max(0, prefix_floor(occ, j));
    for (int t = 0; t <= cars; ++t) {
      next[t] = 0;
      if (t < floor) continue;
      for (int s = 0; s <= t; ++s) {
        if (prefix[t - s] == 0) continue;
        next[t] += prefix[t - s] * binomial(static_cast<unsigned>(t), s) * weight[s];
      }
    }
    prefix.swap(next);
  }
  BigInt total = 0;
  for (int t = 0; t <= cars; ++t) {
    if (prefix[t] == 0) continue;
    const int last = cars - t;
    total += prefix[t] * binomial(static_cast<unsigned>(cars), last) * weight[last];
  }
  return total;
}

BigInt completions_count_by_lattice(const OccupiedVector& occ) {
  const unsigned cars = static_cast<unsigned>(occ.n() - occ.size());
  const auto weight = tree_weights(static_cast<int>(cars));
  BigInt total = 0;
  for_each_lattice_point(occ, [&](std::span<const unsigned> s) {
    BigInt term = multinomial(cars, s);
    for (unsigned part : s) term *= weight[part];
    total += term;
  });
  return total;
}

BigInt completions_count_block(int n, int start, int length) {
  if (n < 1 || length < 1 || start < 0 || start > n - length) {
    throw std::invalid_argument("completions_count_block: need n, length >= 1 and 0 <= start <= n - length");
  }
  if (start == 0) {
    ExactRational v = ExactRational(length + 1) * signed_power(n + 1, n - length - 1);
    if (v.get_den() != 1) throw ConsistencyError("completions_count_block: prefix form not integral");
    return v.get_num();
  }
  ExactRational total = 0;
  const int cars = n - length;
  for (int k = start; k <= cars; ++k) {
    total += ExactRational(binomial(static_cast<unsigned>(cars), k)) * signed_power(k + 1, k - 1) *
             length * signed_power(n - k, n - k - length - 1);
  }
  if (total.get_den() != 1) {
    throw ConsistencyError("completions_count_block: total " + to_string(total) + " is not an integer");
  }
  return total.get_num();
}

BigInt completions_count_bruteforce(const OccupiedVector& occ, bool force, unsigned workers) {
  const int n = occ.n();
  if (n > kBruteForceGuard && !force) {
    throw GuardError("brute-force completion count above n = " + std::to_string(kBruteForceGuard) +
                     " requires force");
  }
  if (workers == 0) workers = 1;
  const int cars = n - occ.size();
  std::uint64_t tuples = 1;
  for (int i = 0; i < cars; ++i) tuples *= static_cast<std::uint64_t>(n);

  std::vector<std::uint64_t> hits(workers, 0);
  run_shards(workers, [&](unsigned shard) {
    const ShardRange range = shard_range(tuples, shard, workers);
    std::vector<int> prefs(static_cast<std::size_t>(cars));
    for (std::uint64_t index = range.begin; index < range.end; ++index) {
      std::uint64_t rest = index;
      for (int c = cars - 1; c >= 0; --c) {
        prefs[c] = static_cast<int>(rest % static_cast<std::uint64_t>(n)) + 1;
        rest /= static_cast<std::uint64_t>(n);
      }
      if (simulate_parking(prefs, n, occ.spots()).success) ++hits[shard];
    }
  });
  BigInt total = 0;
  for (auto h : hits) total += BigInt(static_cast<unsigned long>(h));
  return total;
}

}  // namespace pfcycles
