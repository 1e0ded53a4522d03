#include "pfcycles/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfcycles {

std::vector<int> CycleProfile::truncated(int d) const {
  std::vector<int> out(static_cast<std::size_t>(std::max(d, 0)), 0);
  for (int k = 1; k <= d && k <= n; ++k) out[k - 1] = counts[k - 1];
  return out;
}

FunctionalGraph::FunctionalGraph(std::span<const int> successors)
    : successor_(successors.size()),
      tail_(successors.size(), 0),
      root_(successors.size(), -1),
      cycle_of_(successors.size(), -1),
      position_(successors.size(), -1) {
  const int n = static_cast<int>(successors.size());
  for (int i = 0; i < n; ++i) {
    if (successors[i] < 1 || successors[i] > n) {
      throw std::invalid_argument("FunctionalGraph: successor outside [1, n]");
    }
    successor_[i] = successors[i] - 1;
  }

  enum : char { kUnseen, kOnPath, kDone };
  std::vector<char> state(static_cast<std::size_t>(n), kUnseen);
  std::vector<int> path_index(static_cast<std::size_t>(n), -1);
  std::vector<int> path;
  for (int start = 0; start < n; ++start) {
    if (state[start] != kUnseen) continue;
    path.clear();
    int x = start;
    while (state[x] == kUnseen) {
      state[x] = kOnPath;
      path_index[x] = static_cast<int>(path.size());
      path.push_back(x);
      x = successor_[x];
    }
    std::size_t tree_end = path.size();
    if (state[x] == kOnPath) {
      // path[path_index[x]..] closes a new cycle.
      const int id = static_cast<int>(cycle_lengths_.size());
      const auto first = static_cast<std::size_t>(path_index[x]);
      cycle_lengths_.push_back(static_cast<int>(path.size() - first));
      for (std::size_t i = first; i < path.size(); ++i) {
        const int v = path[i];
        cycle_of_[v] = id;
        position_[v] = static_cast<int>(i - first);
        root_[v] = v;
        tail_[v] = 0;
        state[v] = kDone;
      }
      tree_end = first;
    }
    for (std::size_t i = tree_end; i-- > 0;) {
      const int v = path[i];
      tail_[v] = tail_[successor_[v]] + 1;
      root_[v] = root_[successor_[v]];
      state[v] = kDone;
    }
  }
}

std::optional<int> FunctionalGraph::cycle_id(int a) const {
  const int id = cycle_of_[a - 1];
  return id < 0 ? std::nullopt : std::optional<int>(id);
}

std::optional<int> FunctionalGraph::cycle_length(int a) const {
  const int id = cycle_of_[a - 1];
  return id < 0 ? std::nullopt : std::optional<int>(cycle_lengths_[id]);
}

std::optional<int> FunctionalGraph::cycle_position(int a) const {
  const int p = position_[a - 1];
  return p < 0 ? std::nullopt : std::optional<int>(p);
}

CycleProfile FunctionalGraph::profile() const {
  CycleProfile p;
  p.n = n();
  p.counts.assign(static_cast<std::size_t>(p.n), 0);
  for (int len : cycle_lengths_) ++p.counts[len - 1];
  p.total = static_cast<int>(cycle_lengths_.size());
  return p;
}

CycleProfile cycle_profile(std::span<const int> seq) {
  CycleCounter counter(static_cast<int>(seq.size()));
  CycleProfile p;
  p.n = static_cast<int>(seq.size());
  p.total = counter.scan(seq);
  p.counts = counter.counts();
  return p;
}

CycleProfile cycle_profile(const PrefSeq& seq) { return cycle_profile(seq.values()); }

std::optional<int> cycle_length_at(const PrefSeq& seq, int a) {
  if (a < 1 || a > seq.n()) throw std::out_of_range("cycle_length_at: vertex out of range");
  return FunctionalGraph(seq).cycle_length(a);
}

int tail_length_at(const PrefSeq& seq, int a) {
  if (a < 1 || a > seq.n()) throw std::out_of_range("tail_length_at: vertex out of range");
  return FunctionalGraph(seq).tail_length(a);
}

CycleCounter::CycleCounter(int n)
    : state_(static_cast<std::size_t>(std::max(n, 0))), counts_(static_cast<std::size_t>(std::max(n, 0))) {}

int CycleCounter::scan(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  if (n != static_cast<int>(state_.size())) {
    throw std::invalid_argument("CycleCounter: sequence length does not match n");
  }
  // state_ holds 0 for unseen, otherwise (walk index + 1) of the walk that
  // first reached the vertex; a walk that meets its own mark closed a cycle.
  std::fill(state_.begin(), state_.end(), 0);
  std::fill(counts_.begin(), counts_.end(), 0);
  int total = 0;
  for (int start = 0; start < n; ++start) {
    if (state_[start] != 0) continue;
    const int mark = start + 1;
    int x = start;
    while (state_[x] == 0) {
      state_[x] = mark;
      x = seq[x] - 1;
    }
    if (state_[x] == mark) {
      int len = 1;
      for (int y = seq[x] - 1; y != x; y = seq[y] - 1) ++len;
      ++counts_[len - 1];
      ++total;
    }
  }
  return total;
}

}  // namespace pfcycles
