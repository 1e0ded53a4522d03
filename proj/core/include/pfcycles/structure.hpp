#pragma once

// Functional digraph of a preference sequence: vertex i has the single edge
// i -> pi_i. Each component is a cycle with in-trees hanging off it.

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "pfcycles/parking.hpp"

namespace pfcycles {

/// Cycle counts (C_1, ..., C_n) and their total K.
struct CycleProfile {
  int n = 0;
  std::vector<int> counts;  // counts[k-1] = C_k
  int total = 0;

  int count(int k) const { return k >= 1 && k <= n ? counts[k - 1] : 0; }

  /// (C_1, ..., C_d); zero-padded if d > n.
  std::vector<int> truncated(int d) const;

  bool operator==(const CycleProfile&) const = default;
};

class FunctionalGraph {
 public:
  /// Successor values are 1-based and must lie in [1, n], n = size.
  explicit FunctionalGraph(std::span<const int> successors);
  explicit FunctionalGraph(const PrefSeq& seq) : FunctionalGraph(seq.values()) {}

  int n() const { return static_cast<int>(successor_.size()); }

  // Vertex arguments below are 1-based.
  int successor(int a) const { return successor_[a - 1] + 1; }
  bool on_cycle(int a) const { return tail_[a - 1] == 0; }
  std::optional<int> cycle_id(int a) const;
  std::optional<int> cycle_length(int a) const;
  /// Edges from a to the first cycle vertex on its forward orbit.
  int tail_length(int a) const { return tail_[a - 1]; }
  /// The cycle vertex where a's forward orbit enters its cycle.
  int root(int a) const { return root_[a - 1] + 1; }
  /// Index of a cycle vertex along its cycle in successor order, 0 at the
  /// vertex where the cycle was first discovered.
  std::optional<int> cycle_position(int a) const;

  int cycle_count() const { return static_cast<int>(cycle_lengths_.size()); }
  /// Length of cycle `id`, ids in [0, cycle_count()).
  int length_of_cycle(int id) const { return cycle_lengths_[id]; }
  /// Cycle id of the cycle a's orbit enters (a need not lie on it).
  int component_of(int a) const { return cycle_of_[root_[a - 1]]; }

  CycleProfile profile() const;

 private:
  std::vector<int> successor_;  // 0-based
  std::vector<int> tail_;
  std::vector<int> root_;
  std::vector<int> cycle_of_;   // -1 off cycles
  std::vector<int> position_;   // -1 off cycles
  std::vector<int> cycle_lengths_;
};

CycleProfile cycle_profile(std::span<const int> seq);
CycleProfile cycle_profile(const PrefSeq& seq);

std::optional<int> cycle_length_at(const PrefSeq& seq, int a);
int tail_length_at(const PrefSeq& seq, int a);

/// Allocation-free cycle counting for hot Monte Carlo loops.
class CycleCounter {
 public:
  explicit CycleCounter(int n);

  /// Entries of seq must lie in [1, n]; they are not range-checked.
  /// counts()[k-1] = C_k of seq after the call; returns K.
  int scan(std::span<const int> seq);
  const std::vector<int>& counts() const { return counts_; }

 private:
  std::vector<int> state_;
  std::vector<int> counts_;
};

}  // namespace pfcycles
