#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfcycles/exact_math.hpp"
#include "pfcycles/sharding.hpp"

namespace pfcycles {

/// A preference sequence pi in [n]^n, stored 1-based as in the parking model.
class PrefSeq {
 public:
  /// Throws std::invalid_argument if empty or any entry is outside [1, n].
  explicit PrefSeq(std::vector<int> prefs);

  /// Parses the comma-separated text form, e.g. "6,1,2,4".
  static PrefSeq parse(std::string_view text);

  int n() const { return static_cast<int>(prefs_.size()); }
  int operator[](std::size_t i) const { return prefs_[i]; }
  std::span<const int> values() const { return prefs_; }
  std::string to_string() const;

  auto operator<=>(const PrefSeq&) const = default;

 private:
  std::vector<int> prefs_;
};

std::string format_sequence(std::span<const int> values);

struct ParkingOutcome {
  bool success = false;
  std::optional<std::vector<int>> assignment;  // car i -> spot, 1-based
  std::optional<int> failed_car;               // 1-based
};

/// Cars arrive in order; each takes its preferred spot or the first free spot
/// after it. `occupied` spots are taken before the first car arrives.
/// Throws std::invalid_argument for preferences or occupied spots outside
/// [1, n] and for repeated occupied spots.
ParkingOutcome simulate_parking(std::span<const int> seq, int n,
                                std::span<const int> occupied = {});

/// Sorted criterion: pi_(i) <= i for the weakly increasing rearrangement.
bool is_parking_function(std::span<const int> values);
bool is_parking_function(const PrefSeq& seq);

/// Pigeonhole criterion: |{k : pi_k <= i}| >= i for all i in [n].
bool satisfies_pigeonhole(std::span<const int> values);

/// (n+1)^(n-1). Throws std::invalid_argument for n < 1.
BigInt count_parking_functions(int n);

inline constexpr int kEnumerationGuard = 8;

using SequenceVisitor = std::function<void(std::span<const int>)>;

/// Visits every parking function of size n once, lexicographically.
/// Throws GuardError when n > kEnumerationGuard and !force.
void for_each_parking_function(int n, const SequenceVisitor& visit, bool force = false);

/// The part of the enumeration whose first entry v has (v - 1) % shards == shard,
/// still in lexicographic order. The shards partition PF_n.
void for_each_parking_function_shard(int n, unsigned shard, unsigned shards,
                                     const SequenceVisitor& visit, bool force = false);

std::vector<PrefSeq> enumerate_parking_functions(int n, bool force = false);

/// Exactly uniform sampler over PF_n by Pollak's circle argument: park a
/// uniform word in {1..n+1}^n on a circle of n+1 spots and rotate so that the
/// single empty spot becomes spot n+1.
class UniformSampler {
 public:
  explicit UniformSampler(int n);

  int n() const { return n_; }

  /// The returned view is valid until the next call.
  std::span<const int> draw(Rng& rng);

 private:
  int n_;
  std::vector<int> word_;
  std::vector<int> load_;
  std::vector<int> out_;
};

PrefSeq sample_uniform(int n, Rng& rng);

}  // namespace pfcycles
