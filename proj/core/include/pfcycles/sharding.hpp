#pragma once

// Deterministic work splitting for Monte Carlo and enumeration.
//
// Stream-split rule: worker w of a run seeded with `seed` draws from
// std::mt19937_64 seeded by splitmix64(seed ^ splitmix64(w + 1)). Samples are
// split into contiguous blocks, worker w taking block w. Hence (seed, workers)
// fixes every sample; aggregates are merged in worker order.

#include <cstdint>
#include <functional>
#include <random>

namespace pfcycles {

using Rng = std::mt19937_64;

struct SamplingPlan {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Independent generator for worker `stream` of a run seeded with `seed`.
Rng make_stream(std::uint64_t seed, std::uint64_t stream);

struct ShardRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t size() const { return end - begin; }
};

/// Contiguous block of [0, total) owned by `shard` out of `shards`.
ShardRange shard_range(std::uint64_t total, unsigned shard, unsigned shards);

/// Runs task(shard) for shard in [0, shards) on separate threads and joins.
/// The first exception thrown by any shard is rethrown.
void run_shards(unsigned shards, const std::function<void(unsigned)>& task);

}  // namespace pfcycles
