#include "pfcycles/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pfcycles/completions.hpp"
#include "pfcycles/errors.hpp"
#include "pfcycles/parking.hpp"
#include "pfcycles/structure.hpp"

namespace pfcycles {

namespace {

void require_positive(int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be at least 1");
}

void require_k(int n, int k, const char* who) {
  require_positive(n, who);
  if (k < 1 || k > n) throw std::invalid_argument(std::string(who) + ": need 1 <= k <= n");
}

ExactRational population(int n) { return ExactRational(count_parking_functions(n)); }

// Sums of C_k, C_k^2, K and K^2 over a sharded Monte Carlo run.
struct CycleSums {
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> sum;
  std::vector<std::uint64_t> sum_sq;
  std::uint64_t total_sum = 0;
  std::uint64_t total_sum_sq = 0;
};

CycleSums sample_cycle_sums(int n, int k_max, const SamplingPlan& plan) {
  const unsigned workers = plan.workers == 0 ? 1 : plan.workers;
  std::vector<CycleSums> partial(workers);
  run_shards(workers, [&](unsigned shard) {
    CycleSums& acc = partial[shard];
    acc.sum.assign(static_cast<std::size_t>(k_max), 0);
    acc.sum_sq.assign(static_cast<std::size_t>(k_max), 0);
    const ShardRange range = shard_range(plan.samples, shard, workers);
    Rng rng = make_stream(plan.seed, shard);
    UniformSampler sampler(n);
    CycleCounter counter(n);
    for (std::uint64_t i = range.begin; i < range.end; ++i) {
      const std::uint64_t total = static_cast<std::uint64_t>(counter.scan(sampler.draw(rng)));
      const auto& counts = counter.counts();
      for (int k = 0; k < k_max; ++k) {
        const std::uint64_t c = static_cast<std::uint64_t>(counts[k]);
        acc.sum[k] += c;
        acc.sum_sq[k] += c * c;
      }
      acc.total_sum += total;
      acc.total_sum_sq += total * total;
    }
    acc.samples = range.size();
  });
  CycleSums merged;
  merged.sum.assign(static_cast<std::size_t>(k_max), 0);
  merged.sum_sq.assign(static_cast<std::size_t>(k_max), 0);
  for (const auto& p : partial) {
    merged.samples += p.samples;
    for (int k = 0; k < k_max; ++k) {
      merged.sum[k] += p.sum[k];
      merged.sum_sq[k] += p.sum_sq[k];
    }
    merged.total_sum += p.total_sum;
    merged.total_sum_sq += p.total_sum_sq;
  }
  return merged;
}

std::pair<double, double> mean_and_error(std::uint64_t sum, std::uint64_t sum_sq, std::uint64_t count) {
  if (count == 0) return {0.0, 0.0};
  const double m = static_cast<double>(sum) / static_cast<double>(count);
  if (count < 2) return {m, 0.0};
  const double var = (static_cast<double>(sum_sq) - static_cast<double>(count) * m * m) /
                     static_cast<double>(count - 1);
  return {m, std::sqrt(std::max(var, 0.0) / static_cast<double>(count))};
}

}  // namespace

ExactRational expected_fixed_points(int n) {
  require_positive(n, "expected_fixed_points");
  BigInt first_coordinate_total = 0;
  for (int i = 1; i <= n; ++i) first_coordinate_total += completions_count(OccupiedVector(n, {i}));
  const ExactRational mean = ExactRational(first_coordinate_total) / population(n);
  if (mean != 1) {
    throw ConsistencyError("expected_fixed_points: completion sum gave " + to_string(mean));
  }
  return mean;
}

ExactRational expected_transpositions(int n) {
  if (n < 2) throw std::invalid_argument("expected_transpositions: n must be at least 2");
  return ratio(n, 2 * (n + 1));
}

ExactRational expected_k_cycles_exact(int n, int k, bool force) {
  require_k(n, k, "expected_k_cycles_exact");
  if (n > kExactCycleGuard && !force) {
    throw GuardError("expected_k_cycles_exact above n = " + std::to_string(kExactCycleGuard) +
                     " requires force");
  }
  // Walk all k-subsets {i_1 < ... < i_k} of [n] in lexicographic order.
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) subset[j] = j + 1;
  BigInt total = 0;
  while (true) {
    total += completions_count(OccupiedVector(n, subset));
    int j = k - 1;
    while (j >= 0 && subset[j] == n - k + j + 1) --j;
    if (j < 0) break;
    ++subset[j];
    for (int r = j + 1; r < k; ++r) subset[r] = subset[r - 1] + 1;
  }
  return ExactRational(factorial(static_cast<unsigned>(k - 1)) * total) / population(n);
}

ExactRational k_cycle_reference(int n, int k) {
  require_k(n, k, "k_cycle_reference");
  return ratio(1, k) * signed_power(ratio(n, n + 1), k - 1);
}

ExactRational cycle_len_prob_bound(int n, int k) {
  require_k(n, k, "cycle_len_prob_bound");
  return ratio(k + 1, n + 1);
}

ExactRational harmonic_number(int n) {
  if (n < 0) throw std::invalid_argument("harmonic_number: n must be non-negative");
  ExactRational h = 0;
  for (int k = 1; k <= n; ++k) h += ratio(1, k);
  return h;
}

std::vector<MomentEstimate> expected_k_cycles_mc(int n, int k_max, const SamplingPlan& plan) {
  require_positive(n, "expected_k_cycles_mc");
  if (k_max < 1 || k_max > n) throw std::invalid_argument("expected_k_cycles_mc: need 1 <= k_max <= n");
  const CycleSums sums = sample_cycle_sums(n, k_max, plan);
  std::vector<MomentEstimate> out;
  for (int k = 1; k <= k_max; ++k) {
    auto [m, se] = mean_and_error(sums.sum[k - 1], sums.sum_sq[k - 1], sums.samples);
    out.push_back({k, m, se});
  }
  return out;
}

TotalCyclesStats total_cycles_stats(int n, const SamplingPlan& plan) {
  require_positive(n, "total_cycles_stats");
  const CycleSums sums = sample_cycle_sums(n, 1, plan);
  TotalCyclesStats out;
  out.n = n;
  out.samples = sums.samples;
  std::tie(out.mean, out.std_error) = mean_and_error(sums.total_sum, sums.total_sum_sq, sums.samples);
  out.harmonic = harmonic_number(n);
  return out;
}

EnumeratedMoments enumerated_cycle_means(int n, bool force, unsigned workers) {
  require_positive(n, "enumerated_cycle_means");
  if (workers == 0) workers = 1;
  struct Partial {
    std::vector<std::uint64_t> sums;
    std::uint64_t total = 0;
    std::uint64_t count = 0;
  };
  std::vector<Partial> partial(workers);
  run_shards(workers, [&](unsigned shard) {
    Partial& acc = partial[shard];
    acc.sums.assign(static_cast<std::size_t>(n), 0);
    CycleCounter counter(n);
    for_each_parking_function_shard(
        n, shard, workers,
        [&](std::span<const int> seq) {
          acc.total += static_cast<std::uint64_t>(counter.scan(seq));
          for (int k = 0; k < n; ++k) acc.sums[k] += static_cast<std::uint64_t>(counter.counts()[k]);
          ++acc.count;
        },
        force);
  });
  EnumeratedMoments out;
  out.n = n;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> sums(static_cast<std::size_t>(n), 0);
  std::uint64_t total = 0;
  for (const auto& p : partial) {
    count += p.count;
    total += p.total;
    for (int k = 0; k < n; ++k) sums[k] += p.sums[k];
  }
  out.population = BigInt(static_cast<unsigned long>(count));
  if (out.population != count_parking_functions(n)) {
    throw ConsistencyError("enumerated_cycle_means: enumeration size differs from (n+1)^(n-1)");
  }
  for (int k = 0; k < n; ++k) {
    out.mean_counts.push_back(ratio(BigInt(static_cast<unsigned long>(sums[k])), out.population));
  }
  out.mean_total = ratio(BigInt(static_cast<unsigned long>(total)), out.population);
  return out;
}

ExactRational VertexLengthTable::cycle_probability(int a, int k) const {
  return ratio(BigInt(static_cast<unsigned long>(cycle_length.at(a - 1).at(k))), population);
}

ExactRational VertexLengthTable::tail_probability(int a, int k) const {
  return ratio(BigInt(static_cast<unsigned long>(tail_length.at(a - 1).at(k))), population);
}

VertexLengthTable vertex_length_table(int n, bool force) {
  require_positive(n, "vertex_length_table");
  VertexLengthTable table;
  table.n = n;
  table.cycle_length.assign(n, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  table.tail_length.assign(n, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  std::uint64_t count = 0;
  for_each_parking_function(
      n,
      [&](std::span<const int> seq) {
        const FunctionalGraph g(seq);
        for (int a = 1; a <= n; ++a) {
          if (auto len = g.cycle_length(a)) ++table.cycle_length[a - 1][*len];
          ++table.tail_length[a - 1][g.tail_length(a)];
        }
        ++count;
      },
      force);
  table.population = BigInt(static_cast<unsigned long>(count));
  return table;
}

}  // namespace pfcycles
