#pragma once

// Parking completions: with spots v_1 < ... < v_l already taken, count the
// preference sequences of the remaining n - l cars under which every car parks.

#include <functional>
#include <span>
#include <vector>

#include "pfcycles/exact_math.hpp"

namespace pfcycles {

class OccupiedVector {
 public:
  /// Throws std::invalid_argument unless 1 <= v_1 < ... < v_l <= n, n >= 1.
  OccupiedVector(int n, std::vector<int> spots);

  /// The contiguous block (start + 1, ..., start + length).
  static OccupiedVector block(int n, int start, int length);

  int n() const { return n_; }
  int size() const { return static_cast<int>(spots_.size()); }
  std::span<const int> spots() const { return spots_; }

 private:
  int n_;
  std::vector<int> spots_;
};

using LatticePoint = std::vector<unsigned>;

/// Visits every s in N^(l+1) with s_1 + ... + s_i >= v_i - i for i <= l and
/// sum s = n - l, in lexicographic order.
void for_each_lattice_point(const OccupiedVector& occ,
                            const std::function<void(std::span<const unsigned>)>& visit);

std::vector<LatticePoint> lattice_points(const OccupiedVector& occ);

/// sum over lattice points of multinomial(n-l; s) * prod (s_i + 1)^(s_i - 1).
/// Evaluated by a prefix-sum recursion over the same lattice, O(l (n-l)^2)
/// big-integer operations. With no occupied spots this is (n+1)^(n-1).
BigInt completions_count(const OccupiedVector& occ);

/// Same sum, evaluated term by term over lattice_points().
BigInt completions_count_by_lattice(const OccupiedVector& occ);

/// Occupied block (start+1, ..., start+length). For start >= 1 evaluates
/// sum_{k=start}^{n-length} C(n-length,k)(k+1)^(k-1) length (n-k)^(n-k-length-1)
/// in exact rationals; for start == 0 uses (length+1)(n+1)^(n-length-1).
/// Throws std::invalid_argument for start/length out of range and
/// ConsistencyError if the rational total is not an integer.
BigInt completions_count_block(int n, int start, int length);

inline constexpr int kBruteForceGuard = 7;

/// Counts tuples in [n]^(n-l) that all park around the occupied spots, by
/// simulation. Throws GuardError for n > kBruteForceGuard unless force.
BigInt completions_count_bruteforce(const OccupiedVector& occ, bool force = false,
                                    unsigned workers = 1);

}  // namespace pfcycles
