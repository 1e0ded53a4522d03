#pragma once

// Joint laws of W = (C_1, ..., C_d) and their distance to the product-Poisson
// law with independent coordinates Y_k ~ Poisson(1/k).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pfcycles/exact_math.hpp"
#include "pfcycles/sharding.hpp"

namespace pfcycles {

using CountVector = std::vector<int>;

class JointDistribution {
 public:
  enum class Kind { exact, empirical };

  /// Rational masses summing to exactly 1. Zero masses are dropped. Throws
  /// std::invalid_argument on a key of the wrong dimension, a key with
  /// sum k w_k > n, a negative mass or a total other than 1.
  static JointDistribution exact(int n, int d, std::map<CountVector, ExactRational> masses);

  /// Observed counts; probabilities are count / sample_count.
  static JointDistribution empirical(int n, int d, std::map<CountVector, std::uint64_t> counts,
                                     std::optional<std::uint64_t> seed = std::nullopt);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int d() const { return d_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  std::uint64_t sample_count() const { return samples_; }

  std::vector<CountVector> support() const;
  long double probability(const CountVector& w) const;
  /// Exact kind only; nullopt for empirical distributions.
  std::optional<ExactRational> exact_probability(const CountVector& w) const;
  std::uint64_t count(const CountVector& w) const;

  /// Sum of all masses, as long double.
  long double total_mass() const;

  /// Law of the first `d` coordinates. Requires 1 <= d <= this->d().
  JointDistribution marginal(int d) const;

  /// E(W_k) for 1 <= k <= d.
  long double mean(int k) const;
  std::optional<ExactRational> exact_mean(int k) const;

 private:
  JointDistribution(Kind kind, int n, int d) : kind_(kind), n_(n), d_(d) {}

  Kind kind_;
  int n_;
  int d_;
  std::map<CountVector, ExactRational> masses_;  // exact kind
  std::map<CountVector, std::uint64_t> counts_;  // empirical kind
  std::uint64_t samples_ = 0;
  std::optional<std::uint64_t> seed_;
};

const char* to_string(JointDistribution::Kind kind);

/// e^(-rate) rate^j / j!, evaluated in long double.
long double poisson_pmf(long double rate, unsigned j);
long double poisson_pmf(const ExactRational& rate, unsigned j);

/// prod_{k=1}^{d} poisson_pmf(1/k, w_k), d = w.size().
long double product_poisson_pmf(std::span<const int> w);

inline constexpr int kExactDistributionGuard = 8;

/// Law of (C_1, ..., C_d) under uniform PF_n by full enumeration.
/// Requires 1 <= d <= n; GuardError above kExactDistributionGuard unless force.
JointDistribution exact_joint_distribution(int n, int d, bool force = false, unsigned workers = 1);

/// Frequencies of (C_1, ..., C_d) over plan.samples uniform draws.
JointDistribution empirical_joint_distribution(int n, int d, const SamplingPlan& plan);

/// (1/2)[sum_{w in supp P} |P(w) - Q(w)| + 1 - Q(supp P)] with Q the product
/// Poisson law; the complement of the support contributes its Q-mass exactly.
double tv_distance_to_poisson(const JointDistribution& p);

/// (1/2) sum over the union of supports of |P - Q|. Throws
/// std::invalid_argument when the dimensions differ.
double tv_distance(const JointDistribution& p, const JointDistribution& q);

/// "w,mass" rows; w as ';'-joined counts, mass as num/den for exact laws.
std::string to_csv(const JointDistribution& dist);

std::string format_count_vector(const CountVector& w);

}  // namespace pfcycles
