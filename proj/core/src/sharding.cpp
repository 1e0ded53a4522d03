#include "pfcycles/sharding.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pfcycles {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(seed ^ splitmix64(stream + 1)));
}

ShardRange shard_range(std::uint64_t total, unsigned shard, unsigned shards) {
  if (shards == 0) throw std::invalid_argument("shard_range: shards must be positive");
  const std::uint64_t base = total / shards;
  const std::uint64_t extra = total % shards;
  const std::uint64_t begin = shard * base + std::min<std::uint64_t>(shard, extra);
  return {begin, begin + base + (shard < extra ? 1 : 0)};
}

void run_shards(unsigned shards, const std::function<void(unsigned)>& task) {
  if (shards == 0) throw std::invalid_argument("run_shards: shards must be positive");
  if (shards == 1) {
    task(0);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> threads;
    threads.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) {
      threads.emplace_back([&, s] {
        try {
          task(s);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace pfcycles
