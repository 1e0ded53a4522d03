#pragma once

#include <cstdint>
#include <vector>

#include "pfcycles/exact_math.hpp"
#include "pfcycles/sharding.hpp"

namespace pfcycles {

/// sum_i PC_n((i)) / |PF_n|, which is exactly 1. Throws ConsistencyError if
/// the completion sum disagrees.
ExactRational expected_fixed_points(int n);

/// n / (2(n+1)), for n >= 2.
ExactRational expected_transpositions(int n);

inline constexpr int kExactCycleGuard = 12;

/// E(C_k) = (k-1)! / |PF_n| * sum over i_1 < ... < i_k of PC_n((i_1, ..., i_k)).
/// Throws GuardError for n > kExactCycleGuard unless force.
ExactRational expected_k_cycles_exact(int n, int k, bool force = false);

/// Finite-n reference (1/k)(n/(n+1))^(k-1) for E(C_k); tends to 1/k.
ExactRational k_cycle_reference(int n, int k);

/// (k+1)/(n+1): bound on P(L(C_a) = k) and P(L(P_a) = k).
ExactRational cycle_len_prob_bound(int n, int k);

/// H_n = sum_{k<=n} 1/k.
ExactRational harmonic_number(int n);

struct MomentEstimate {
  int k = 0;
  double mean = 0;
  double std_error = 0;
};

/// Sample means of C_1..C_kmax over uniform parking functions.
std::vector<MomentEstimate> expected_k_cycles_mc(int n, int k_max, const SamplingPlan& plan);

struct TotalCyclesStats {
  int n = 0;
  std::uint64_t samples = 0;
  double mean = 0;
  double std_error = 0;
  ExactRational harmonic;
};

/// Monte Carlo mean of K_n next to H_n. Only the order log n is expected.
TotalCyclesStats total_cycles_stats(int n, const SamplingPlan& plan);

struct EnumeratedMoments {
  int n = 0;
  BigInt population;
  std::vector<ExactRational> mean_counts;  // [k-1] = E(C_k)
  ExactRational mean_total;                // E(K_n)
};

/// Exact means by visiting all of PF_n (guarded like enumeration).
EnumeratedMoments enumerated_cycle_means(int n, bool force = false, unsigned workers = 1);

/// Per-vertex counts over PF_n of {L(C_a) = k} and {L(P_a) = k}.
struct VertexLengthTable {
  int n = 0;
  BigInt population;
  // [a-1][k]; k = 0 is used by tails of cycle vertices.
  std::vector<std::vector<std::uint64_t>> cycle_length;
  std::vector<std::vector<std::uint64_t>> tail_length;

  ExactRational cycle_probability(int a, int k) const;
  ExactRational tail_probability(int a, int k) const;
};

VertexLengthTable vertex_length_table(int n, bool force = false);

}  // namespace pfcycles
