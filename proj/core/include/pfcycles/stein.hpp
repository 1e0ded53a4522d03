#pragma once

// Exchangeable pair for cycle counts: swap the entries of a uniform parking
// function at a uniformly chosen pair of positions {a, b}, and watch how the
// truncated profile W = (C_1, ..., C_d) moves.
//
//   A_k: C'_k = C_k + 1 and C'_j = C_j for k < j <= d
//   B_k: C'_k = C_k - 1 and C'_j = C_j for k < j <= d

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfcycles/exact_math.hpp"
#include "pfcycles/parking.hpp"
#include "pfcycles/sharding.hpp"
#include "pfcycles/structure.hpp"

namespace pfcycles {

/// Swaps the entries at 1-based positions a < b.
PrefSeq transpose_entries(const PrefSeq& seq, int a, int b);

enum class TransitionEvent { A, B, Neither };

const char* to_string(TransitionEvent e);

/// Throws std::invalid_argument unless 1 <= k <= d.
TransitionEvent classify_transition(const CycleProfile& before, const CycleProfile& after, int k,
                                    int d);

struct EventProbabilities {
  ExactRational a;
  ExactRational b;
};

/// P(A_k | pi) and P(B_k | pi) over a uniform unordered pair, by recomputing
/// the profile after every swap. Zero when n = 1.
EventProbabilities conditional_event_probs(const PrefSeq& seq, int k, int d);

struct PairEventCounts {
  std::uint64_t pairs = 0;
  std::vector<std::uint64_t> a;  // [k-1] = #pairs triggering A_k, k <= d
  std::vector<std::uint64_t> b;
};

/// Counts A_k / B_k pairs for all k <= d at once in O(n^2): each swap only
/// removes the cycles through a or b and closes new ones through them, whose
/// lengths follow from distances in the original graph.
class PairEventScanner {
 public:
  PairEventScanner(int n, int d);

  const PairEventCounts& scan(std::span<const int> seq);

 private:
  int distance(int from, int to) const;

  int n_;
  int d_;
  PairEventCounts counts_;
  std::vector<int> succ_, tail_, root_, cycle_, position_, length_;
  std::vector<int> enter_, leave_;
  std::vector<int> child_start_, children_, stack_;
  std::vector<int> delta_;
};

struct SteinCoefficients {
  // c_k^A = n / (a_divisor k), c_k^B = n / (b_divisor k).
  ExactRational a_divisor = 4;
  ExactRational b_divisor = 3;
};

struct SteinOptions {
  int n = 0;
  int d = 0;
  bool exact = true;
  SamplingPlan plan;  // used when !exact
  SteinCoefficients coefficients;
  bool force = false;
  unsigned workers = 1;
};

struct SteinTermRecord {
  int k = 0;
  ExactRational lambda;  // 1/k
  double alpha = 1;      // min{1, 1.4 lambda^(-1/2)}; recorded, not applied
  ExactRational c_a;
  ExactRational c_b;
  double term_a = 0;     // E|lambda_k - c_a P(A_k | pi)|
  double term_b = 0;     // E|C_k - c_b P(B_k | pi)|
  double term_a_error = 0;
  double term_b_error = 0;
  std::optional<ExactRational> term_a_exact;
  std::optional<ExactRational> term_b_exact;
  ExactRational bound_a;
  ExactRational bound_b;
};

struct SteinReport {
  int n = 0;
  int d = 0;
  std::string method;  // "exact" or "mc"
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  SteinCoefficients coefficients;
  std::vector<SteinTermRecord> terms;
  ExactRational total_bound;
};

inline constexpr int kSteinExactGuard = 7;

/// Throws std::invalid_argument unless 1 <= d < n; GuardError for exact mode
/// above kSteinExactGuard without force.
SteinReport stein_terms(const SteinOptions& options);

ExactRational lemma_bound_A(int n, int k, int d);
ExactRational lemma_bound_B(int n, int k, int d);

/// Sum over k <= d of both lemma bounds, each sum bounded in closed form.
ExactRational tv_upper_bound(int n, int d);

using ProfilePair = std::pair<std::vector<int>, std::vector<int>>;

/// Joint law of ordered full profiles (W, W') over every (pi, {a, b}).
std::map<ProfilePair, std::uint64_t> exchangeable_pair_law(int n, bool force = false);

}  // namespace pfcycles
