#include "pfcycles/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "pfcycles/errors.hpp"
#include "pfcycles/parking.hpp"
#include "pfcycles/structure.hpp"

namespace pfcycles {

namespace {

void check_key(const CountVector& w, int n, int d) {
  if (static_cast<int>(w.size()) != d) throw std::invalid_argument("JointDistribution: key has wrong dimension");
  long weight = 0;
  for (int k = 1; k <= d; ++k) {
    if (w[k - 1] < 0) throw std::invalid_argument("JointDistribution: negative count in key");
    weight += static_cast<long>(k) * w[k - 1];
  }
  if (weight > n) throw std::invalid_argument("JointDistribution: key with sum k w_k > n");
}

void check_shape(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("JointDistribution: need n, d >= 1");
}

}  // namespace

const char* to_string(JointDistribution::Kind kind) {
  return kind == JointDistribution::Kind::exact ? "exact" : "empirical";
}

JointDistribution JointDistribution::exact(int n, int d, std::map<CountVector, ExactRational> masses) {
  check_shape(n, d);
  JointDistribution out(Kind::exact, n, d);
  ExactRational total = 0;
  for (auto& [w, m] : masses) {
    check_key(w, n, d);
    if (m < 0) throw std::invalid_argument("JointDistribution: negative mass");
    if (m == 0) continue;
    total += m;
    out.masses_.emplace(w, m);
  }
  if (total != 1) throw std::invalid_argument("JointDistribution: exact masses sum to " + to_string(total));
  return out;
}

JointDistribution JointDistribution::empirical(int n, int d, std::map<CountVector, std::uint64_t> counts,
                                               std::optional<std::uint64_t> seed) {
  check_shape(n, d);
  JointDistribution out(Kind::empirical, n, d);
  for (const auto& [w, c] : counts) {
    check_key(w, n, d);
    if (c == 0) throw std::invalid_argument("JointDistribution: empirical key with zero count");
    out.samples_ += c;
  }
  if (out.samples_ == 0) throw std::invalid_argument("JointDistribution: no samples");
  out.counts_ = std::move(counts);
  out.seed_ = seed;
  return out;
}

std::vector<CountVector> JointDistribution::support() const {
  std::vector<CountVector> out;
  if (kind_ == Kind::exact) {
    for (const auto& [w, m] : masses_) out.push_back(w);
  } else {
    for (const auto& [w, c] : counts_) out.push_back(w);
  }
  return out;
}

long double JointDistribution::probability(const CountVector& w) const {
  if (kind_ == Kind::exact) {
    auto it = masses_.find(w);
    return it == masses_.end() ? 0.0L : to_long_double(it->second);
  }
  auto it = counts_.find(w);
  return it == counts_.end() ? 0.0L
                             : static_cast<long double>(it->second) / static_cast<long double>(samples_);
}

std::optional<ExactRational> JointDistribution::exact_probability(const CountVector& w) const {
  if (kind_ != Kind::exact) return std::nullopt;
  auto it = masses_.find(w);
  return it == masses_.end() ? ExactRational(0) : it->second;
}

std::uint64_t JointDistribution::count(const CountVector& w) const {
  auto it = counts_.find(w);
  return it == counts_.end() ? 0 : it->second;
}

long double JointDistribution::total_mass() const {
  long double total = 0;
  for (const auto& w : support()) total += probability(w);
  return total;
}

JointDistribution JointDistribution::marginal(int d) const {
  if (d < 1 || d > d_) throw std::invalid_argument("JointDistribution::marginal: need 1 <= d <= dim");
  if (kind_ == Kind::exact) {
    std::map<CountVector, ExactRational> masses;
    for (const auto& [w, m] : masses_) masses[CountVector(w.begin(), w.begin() + d)] += m;
    return exact(n_, d, std::move(masses));
  }
  std::map<CountVector, std::uint64_t> counts;
  for (const auto& [w, c] : counts_) counts[CountVector(w.begin(), w.begin() + d)] += c;
  return empirical(n_, d, std::move(counts), seed_);
}

long double JointDistribution::mean(int k) const {
  if (k < 1 || k > d_) throw std::invalid_argument("JointDistribution::mean: need 1 <= k <= d");
  long double m = 0;
  for (const auto& w : support()) m += static_cast<long double>(w[k - 1]) * probability(w);
  return m;
}

std::optional<ExactRational> JointDistribution::exact_mean(int k) const {
  if (k < 1 || k > d_) throw std::invalid_argument("JointDistribution::exact_mean: need 1 <= k <= d");
  if (kind_ != Kind::exact) return std::nullopt;
  ExactRational m = 0;
  for (const auto& [w, p] : masses_) m += p * w[k - 1];
  return m;
}

long double poisson_pmf(long double rate, unsigned j) {
  if (!(rate > 0)) throw std::invalid_argument("poisson_pmf: rate must be positive");
  long double p = std::exp(-rate);
  for (unsigned i = 1; i <= j; ++i) p *= rate / static_cast<long double>(i);
  return p;
}

long double poisson_pmf(const ExactRational& rate, unsigned j) {
  if (rate <= 0) throw std::invalid_argument("poisson_pmf: rate must be positive");
  return poisson_pmf(to_long_double(rate), j);
}

long double product_poisson_pmf(std::span<const int> w) {
  long double p = 1;
  for (std::size_t k = 1; k <= w.size(); ++k) {
    if (w[k - 1] < 0) return 0;
    p *= poisson_pmf(1.0L / static_cast<long double>(k), static_cast<unsigned>(w[k - 1]));
  }
  return p;
}

JointDistribution exact_joint_distribution(int n, int d, bool force, unsigned workers) {
  if (n < 1 || d < 1 || d > n) throw std::invalid_argument("exact_joint_distribution: need 1 <= d <= n");
  if (workers == 0) workers = 1;
  if (n > kExactDistributionGuard && !force) {
    throw GuardError("exact_joint_distribution above n = " + std::to_string(kExactDistributionGuard) +
                     " requires force");
  }
  std::vector<std::map<CountVector, std::uint64_t>> partial(workers);
  run_shards(workers, [&](unsigned shard) {
    CycleCounter counter(n);
    CountVector key(static_cast<std::size_t>(d));
    for_each_parking_function_shard(
        n, shard, workers,
        [&](std::span<const int> seq) {
          counter.scan(seq);
          for (int k = 0; k < d; ++k) key[k] = counter.counts()[k];
          ++partial[shard][key];
        },
        true);
  });
  std::map<CountVector, std::uint64_t> counts;
  for (const auto& p : partial) {
    for (const auto& [w, c] : p) counts[w] += c;
  }
  const BigInt population = count_parking_functions(n);
  std::map<CountVector, ExactRational> masses;
  for (const auto& [w, c] : counts) masses.emplace(w, ratio(BigInt(static_cast<unsigned long>(c)), population));
  return JointDistribution::exact(n, d, std::move(masses));
}

JointDistribution empirical_joint_distribution(int n, int d, const SamplingPlan& plan) {
  if (n < 1 || d < 1 || d > n) throw std::invalid_argument("empirical_joint_distribution: need 1 <= d <= n");
  if (plan.samples == 0) throw std::invalid_argument("empirical_joint_distribution: samples must be positive");
  const unsigned workers = plan.workers == 0 ? 1 : plan.workers;
  std::vector<std::map<CountVector, std::uint64_t>> partial(workers);
  run_shards(workers, [&](unsigned shard) {
    const ShardRange range = shard_range(plan.samples, shard, workers);
    Rng rng = make_stream(plan.seed, shard);
    UniformSampler sampler(n);
    CycleCounter counter(n);
    CountVector key(static_cast<std::size_t>(d));
    for (std::uint64_t i = range.begin; i < range.end; ++i) {
      counter.scan(sampler.draw(rng));
      for (int k = 0; k < d; ++k) key[k] = counter.counts()[k];
      ++partial[shard][key];
    }
  });
  std::map<CountVector, std::uint64_t> counts;
  for (const auto& p : partial) {
    for (const auto& [w, c] : p) counts[w] += c;
  }
  return JointDistribution::empirical(n, d, std::move(counts), plan.seed);
}

double tv_distance_to_poisson(const JointDistribution& p) {
  long double l1 = 0;
  long double covered = 0;
  for (const auto& w : p.support()) {
    const long double q = product_poisson_pmf(w);
    l1 += std::fabs(p.probability(w) - q);
    covered += q;
  }
  const long double residual = std::max(0.0L, 1.0L - covered);
  return static_cast<double>((l1 + residual) / 2);
}

double tv_distance(const JointDistribution& p, const JointDistribution& q) {
  if (p.d() != q.d()) throw std::invalid_argument("tv_distance: dimensions differ");
  std::set<CountVector> keys;
  for (auto& w : p.support()) keys.insert(w);
  for (auto& w : q.support()) keys.insert(w);
  long double l1 = 0;
  for (const auto& w : keys) l1 += std::fabs(p.probability(w) - q.probability(w));
  return static_cast<double>(l1 / 2);
}

std::string format_count_vector(const CountVector& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string to_csv(const JointDistribution& dist) {
  std::string out = "w,mass\n";
  char buf[64];
  for (const auto& w : dist.support()) {
    out += format_count_vector(w);
    out += ',';
    if (auto exact = dist.exact_probability(w)) {
      out += to_string(*exact);
    } else {
      std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(dist.probability(w)));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace pfcycles
