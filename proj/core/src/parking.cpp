#include "pfcycles/parking.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "pfcycles/errors.hpp"

namespace pfcycles {

PrefSeq::PrefSeq(std::vector<int> prefs) : prefs_(std::move(prefs)) {
  if (prefs_.empty()) throw std::invalid_argument("PrefSeq: sequence must be non-empty");
  const int n = static_cast<int>(prefs_.size());
  for (int v : prefs_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("PrefSeq: entry " + std::to_string(v) + " outside [1, " +
                                  std::to_string(n) + "]");
    }
  }
}

PrefSeq PrefSeq::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw std::invalid_argument("PrefSeq: malformed entry '" + std::string(token) + "'");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  return PrefSeq(std::move(values));
}

std::string format_sequence(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string PrefSeq::to_string() const { return format_sequence(prefs_); }

ParkingOutcome simulate_parking(std::span<const int> seq, int n, std::span<const int> occupied) {
  if (n < 0) throw std::invalid_argument("simulate_parking: n must be non-negative");
  std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
  for (int spot : occupied) {
    if (spot < 1 || spot > n) throw std::invalid_argument("simulate_parking: occupied spot out of range");
    if (taken[spot]) throw std::invalid_argument("simulate_parking: repeated occupied spot");
    taken[spot] = 1;
  }
  for (int pref : seq) {
    if (pref < 1 || pref > n) throw std::invalid_argument("simulate_parking: preference out of range");
  }

  ParkingOutcome outcome;
  std::vector<int> assignment;
  assignment.reserve(seq.size());
  for (std::size_t car = 0; car < seq.size(); ++car) {
    int spot = seq[car];
    while (spot <= n && taken[spot]) ++spot;
    if (spot > n) {
      outcome.failed_car = static_cast<int>(car) + 1;
      return outcome;
    }
    taken[spot] = 1;
    assignment.push_back(spot);
  }
  outcome.success = true;
  outcome.assignment = std::move(assignment);
  return outcome;
}

bool is_parking_function(std::span<const int> values) {
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool is_parking_function(const PrefSeq& seq) { return is_parking_function(seq.values()); }

bool satisfies_pigeonhole(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<int> at_most(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n) return false;
    ++at_most[v];
  }
  int running = 0;
  for (int i = 1; i <= n; ++i) {
    running += at_most[i];
    if (running < i) return false;
  }
  return true;
}

BigInt count_parking_functions(int n) {
  if (n < 1) throw std::invalid_argument("count_parking_functions: n must be at least 1");
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(n) + 1,
                static_cast<unsigned long>(n) - 1);
  return out;
}

namespace {

void check_guard(int n, bool force) {
  if (n < 1) throw std::invalid_argument("enumeration: n must be at least 1");
  if (n > kEnumerationGuard && !force) {
    throw GuardError("enumeration of PF_" + std::to_string(n) + " exceeds the n <= " +
                     std::to_string(kEnumerationGuard) + " guard; pass force to override");
  }
}

// Backtracking over prefixes that can still be completed: with `free` slots
// left, every i needs |{prefix entries <= i}| + free >= i.
class Enumerator {
 public:
  Enumerator(int n, const SequenceVisitor& visit)
      : n_(n), visit_(visit), prefix_(n), at_most_(n + 2, 0) {}

  void run_from(int first_value) {
    place(0, first_value);
    descend(1);
    unplace(first_value);
  }

 private:
  void descend(int pos) {
    if (pos == n_) {
      visit_(std::span<const int>(prefix_));
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      place(pos, v);
      if (feasible(n_ - pos - 1)) descend(pos + 1);
      unplace(v);
    }
  }

  bool feasible(int free) const {
    int running = 0;
    for (int i = 1; i <= n_; ++i) {
      running += at_most_[i];
      if (running + free < i) return false;
    }
    return true;
  }

  void place(int pos, int v) {
    prefix_[pos] = v;
    ++at_most_[v];
  }
  void unplace(int v) { --at_most_[v]; }

  int n_;
  const SequenceVisitor& visit_;
  std::vector<int> prefix_;
  std::vector<int> at_most_;
};

}  // namespace

void for_each_parking_function_shard(int n, unsigned shard, unsigned shards,
                                     const SequenceVisitor& visit, bool force) {
  check_guard(n, force);
  if (shards == 0 || shard >= shards) throw std::invalid_argument("enumeration: bad shard index");
  Enumerator e(n, visit);
  // A first entry v leaves n-1 free slots, always feasible for v <= n.
  for (int v = 1 + static_cast<int>(shard); v <= n; v += static_cast<int>(shards)) e.run_from(v);
}

void for_each_parking_function(int n, const SequenceVisitor& visit, bool force) {
  for_each_parking_function_shard(n, 0, 1, visit, force);
}

std::vector<PrefSeq> enumerate_parking_functions(int n, bool force) {
  std::vector<PrefSeq> out;
  for_each_parking_function(
      n, [&](std::span<const int> v) { out.emplace_back(std::vector<int>(v.begin(), v.end())); },
      force);
  return out;
}

UniformSampler::UniformSampler(int n) : n_(n), word_(n), load_(n + 1), out_(n) {
  if (n < 1) throw std::invalid_argument("UniformSampler: n must be at least 1");
}

std::span<const int> UniformSampler::draw(Rng& rng) {
  const int spots = n_ + 1;
  std::uniform_int_distribution<int> spot(0, n_);
  std::fill(load_.begin(), load_.end(), 0);
  for (int i = 0; i < n_; ++i) {
    word_[i] = spot(rng);
    ++load_[word_[i]];
  }
  // With S_j = sum_{i<=j} (load_i - 1), circular parking leaves exactly one
  // spot empty: the first index where S attains its minimum.
  int running = 0;
  int best = 0;
  int empty = 0;
  for (int j = 0; j < spots; ++j) {
    running += load_[j] - 1;
    if (j == 0 || running < best) {
      best = running;
      empty = j;
    }
  }
  for (int i = 0; i < n_; ++i) {
    out_[i] = ((word_[i] - empty - 1 + spots) % spots) + 1;
  }
  return out_;
}

PrefSeq sample_uniform(int n, Rng& rng) {
  UniformSampler sampler(n);
  auto v = sampler.draw(rng);
  return PrefSeq(std::vector<int>(v.begin(), v.end()));
}

}  // namespace pfcycles
