#include "pfcycles/stein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pfcycles/errors.hpp"

namespace pfcycles {

PrefSeq transpose_entries(const PrefSeq& seq, int a, int b) {
  if (a < 1 || b > seq.n() || a >= b) {
    throw std::invalid_argument("transpose_entries: need 1 <= a < b <= n");
  }
  std::vector<int> values(seq.values().begin(), seq.values().end());
  std::swap(values[a - 1], values[b - 1]);
  return PrefSeq(std::move(values));
}

const char* to_string(TransitionEvent e) {
  switch (e) {
    case TransitionEvent::A: return "A";
    case TransitionEvent::B: return "B";
    case TransitionEvent::Neither: break;
  }
  return "neither";
}

TransitionEvent classify_transition(const CycleProfile& before, const CycleProfile& after, int k,
                                    int d) {
  if (k < 1 || k > d) throw std::invalid_argument("classify_transition: need 1 <= k <= d");
  for (int j = k + 1; j <= d; ++j) {
    if (after.count(j) != before.count(j)) return TransitionEvent::Neither;
  }
  const int step = after.count(k) - before.count(k);
  if (step == 1) return TransitionEvent::A;
  if (step == -1) return TransitionEvent::B;
  return TransitionEvent::Neither;
}

EventProbabilities conditional_event_probs(const PrefSeq& seq, int k, int d) {
  const int n = seq.n();
  if (k < 1 || k > d || d > n) throw std::invalid_argument("conditional_event_probs: need 1 <= k <= d <= n");
  if (n < 2) return {0, 0};
  const CycleProfile before = cycle_profile(seq);
  long hits_a = 0;
  long hits_b = 0;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const CycleProfile after = cycle_profile(transpose_entries(seq, a, b));
      switch (classify_transition(before, after, k, d)) {
        case TransitionEvent::A: ++hits_a; break;
        case TransitionEvent::B: ++hits_b; break;
        case TransitionEvent::Neither: break;
      }
    }
  }
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  return {ratio(hits_a, pairs), ratio(hits_b, pairs)};
}

PairEventScanner::PairEventScanner(int n, int d) : n_(n), d_(d) {
  if (n < 1 || d < 1) throw std::invalid_argument("PairEventScanner: need n, d >= 1");
  const auto un = static_cast<std::size_t>(n);
  succ_.resize(un);
  tail_.resize(un);
  root_.resize(un);
  cycle_.resize(un);
  position_.resize(un);
  enter_.resize(un);
  leave_.resize(un);
  child_start_.resize(un + 1);
  children_.resize(un);
  delta_.assign(static_cast<std::size_t>(d) + 1, 0);
  counts_.a.assign(static_cast<std::size_t>(d), 0);
  counts_.b.assign(static_cast<std::size_t>(d), 0);
}

// First arrival time of the forward orbit of `from` at `to`, or -1.
int PairEventScanner::distance(int from, int to) const {
  if (tail_[to] == 0) {
    const int c = cycle_[to];
    if (cycle_[root_[from]] != c) return -1;
    const int len = length_[c];
    return tail_[from] + ((position_[to] - position_[root_[from]]) % len + len) % len;
  }
  // `to` is a tree vertex: reachable iff it is an ancestor of `from` in the in-forest.
  if (enter_[to] <= enter_[from] && enter_[from] < leave_[to]) return tail_[from] - tail_[to];
  return -1;
}

const PairEventCounts& PairEventScanner::scan(std::span<const int> seq) {
  if (static_cast<int>(seq.size()) != n_) throw std::invalid_argument("PairEventScanner: wrong length");
  const FunctionalGraph g(seq);
  length_.clear();
  for (int c = 0; c < g.cycle_count(); ++c) length_.push_back(g.length_of_cycle(c));
  for (int v = 0; v < n_; ++v) {
    succ_[v] = seq[v] - 1;
    tail_[v] = g.tail_length(v + 1);
    root_[v] = g.root(v + 1) - 1;
    cycle_[v] = g.cycle_id(v + 1).value_or(-1);
    position_[v] = g.cycle_position(v + 1).value_or(-1);
  }

  // Euler tour of the in-forest hanging off cycle vertices (tree edges only).
  std::fill(child_start_.begin(), child_start_.end(), 0);
  for (int v = 0; v < n_; ++v) {
    if (tail_[v] > 0) ++child_start_[succ_[v] + 1];
  }
  for (int v = 0; v < n_; ++v) child_start_[v + 1] += child_start_[v];
  {
    std::vector<int> fill(child_start_.begin(), child_start_.end() - 1);
    for (int v = 0; v < n_; ++v) {
      if (tail_[v] > 0) children_[fill[succ_[v]]++] = v;
    }
  }
  int clock = 0;
  for (int r = 0; r < n_; ++r) {
    if (tail_[r] != 0) continue;
    // stack_ holds vertices; a vertex is pushed once and finalized when its
    // subtree interval closes, tracked by a negative marker.
    stack_.clear();
    stack_.push_back(r);
    while (!stack_.empty()) {
      const int top = stack_.back();
      stack_.pop_back();
      if (top < 0) {
        leave_[~top] = clock;
        continue;
      }
      enter_[top] = clock++;
      stack_.push_back(~top);
      for (int i = child_start_[top]; i < child_start_[top + 1]; ++i) stack_.push_back(children_[i]);
    }
  }

  std::fill(counts_.a.begin(), counts_.a.end(), 0);
  std::fill(counts_.b.begin(), counts_.b.end(), 0);
  counts_.pairs = static_cast<std::uint64_t>(n_) * static_cast<std::uint64_t>(n_ - 1) / 2;

  auto first_hit = [&](int from, int a, int b) -> std::pair<int, int> {
    const int da = distance(from, a);
    const int db = distance(from, b);
    if (da < 0 && db < 0) return {-1, -1};
    if (db < 0 || (da >= 0 && da < db)) return {a, da};
    return {b, db};
  };

  int touched[4];
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (succ_[a] == succ_[b]) continue;
      int touched_count = 0;
      auto bump = [&](int len, int by) {
        if (len > d_) return;
        delta_[len] += by;
        touched[touched_count++] = len;
      };
      // Cycles of the old graph through a or b disappear.
      if (tail_[a] == 0) bump(length_[cycle_[a]], -1);
      if (tail_[b] == 0 && (tail_[a] != 0 || cycle_[a] != cycle_[b])) bump(length_[cycle_[b]], -1);
      // After the swap a -> succ(b) and b -> succ(a); follow each until it
      // returns to a or b.
      const auto [from_a_who, from_a_dist] = first_hit(succ_[b], a, b);
      const auto [from_b_who, from_b_dist] = first_hit(succ_[a], a, b);
      if (from_a_who == a) bump(1 + from_a_dist, +1);
      if (from_b_who == b) bump(1 + from_b_dist, +1);
      if (from_a_who == b && from_b_who == a) bump(2 + from_a_dist + from_b_dist, +1);

      int top = 0;
      for (int i = 0; i < touched_count; ++i) {
        if (delta_[touched[i]] != 0) top = std::max(top, touched[i]);
      }
      if (top > 0) {
        if (delta_[top] == 1) ++counts_.a[top - 1];
        if (delta_[top] == -1) ++counts_.b[top - 1];
      }
      for (int i = 0; i < touched_count; ++i) delta_[touched[i]] = 0;
    }
  }
  return counts_;
}

ExactRational lemma_bound_A(int n, int k, int d) {
  if (k < 1 || k > d || d >= n) throw std::invalid_argument("lemma_bound_A: need 1 <= k <= d < n");
  const long dd = d;
  const long kk = k;
  return ratio(dd * dd + 2 * dd * kk + dd + 6 * kk * kk + 4 * kk + 1, kk * (n - 1)) +
         ratio(dd * kk + 2 * kk * kk + 10 * kk + 3, n - kk);
}

ExactRational lemma_bound_B(int n, int k, int d) {
  if (k < 1 || k > d || d >= n) throw std::invalid_argument("lemma_bound_B: need 1 <= k <= d < n");
  const long dd = d;
  const long kk = k;
  return ratio(kk + 1, n - 1) +
         ratio(2 * dd * dd * kk + 2 * dd * dd + dd * kk * kk * kk - dd * kk * kk + 2 * dd +
                           4 * kk * kk * kk + 2 * kk * kk + 2,
                       kk * (n - kk));
}

ExactRational tv_upper_bound(int n, int d) {
  if (d < 1 || d >= n) throw std::invalid_argument("tv_upper_bound: need 1 <= d < n");
  const BigInt D = d;
  const BigInt D2 = D * D;
  const BigInt D3 = D2 * D;
  const BigInt D4 = D3 * D;
  const BigInt D5 = D4 * D;
  const ExactRational first = ratio(4 * D3 + 7 * D2 + 4 * D, n - 1);
  const ExactRational second = ratio(7 * D3 + 39 * D2 + 50 * D, 6 * (n - d));
  const ExactRational third = ratio(D2 + 3 * D, 2 * (n + 1));
  const ExactRational fourth = ratio(3 * D5 + 26 * D4 + 65 * D3 + 46 * D2 + 28 * D, 12 * (n - d));
  return first + second + third + fourth;
}

namespace {

// Multiplicities of the per-pi quantities entering the two Stein terms.
struct TermHistograms {
  std::uint64_t population = 0;
  std::vector<std::map<std::uint64_t, std::uint64_t>> a;                     // cnt_A -> #pi
  std::vector<std::map<std::pair<int, std::uint64_t>, std::uint64_t>> b;     // (C_k, cnt_B) -> #pi

  explicit TermHistograms(int d) : a(static_cast<std::size_t>(d)), b(static_cast<std::size_t>(d)) {}

  void add(const PairEventCounts& counts, const std::vector<int>& profile_counts) {
    ++population;
    for (std::size_t k = 0; k < a.size(); ++k) {
      ++a[k][counts.a[k]];
      ++b[k][{profile_counts[k], counts.b[k]}];
    }
  }

  void merge(const TermHistograms& other) {
    population += other.population;
    for (std::size_t k = 0; k < a.size(); ++k) {
      for (const auto& [key, m] : other.a[k]) a[k][key] += m;
      for (const auto& [key, m] : other.b[k]) b[k][key] += m;
    }
  }
};

struct Moments {
  ExactRational mean;
  double std_error = 0;
};

// Weighted mean of |value| with the standard error of a sample mean.
template <typename Map, typename ValueFn>
Moments absolute_mean(const Map& histogram, std::uint64_t population, ValueFn value) {
  ExactRational sum = 0;
  double sum_sq = 0;
  for (const auto& [key, multiplicity] : histogram) {
    ExactRational v = abs(value(key));
    const BigInt m(static_cast<unsigned long>(multiplicity));
    sum += v * m;
    const double vd = v.get_d();
    sum_sq += vd * vd * static_cast<double>(multiplicity);
  }
  Moments out;
  out.mean = sum / BigInt(static_cast<unsigned long>(population));
  if (population > 1) {
    const double mean = out.mean.get_d();
    const double pop = static_cast<double>(population);
    const double var = (sum_sq - pop * mean * mean) / (pop - 1);
    out.std_error = std::sqrt(std::max(var, 0.0) / pop);
  }
  return out;
}

}  // namespace

SteinReport stein_terms(const SteinOptions& options) {
  const int n = options.n;
  const int d = options.d;
  if (d < 1 || d >= n) throw std::invalid_argument("stein_terms: need 1 <= d < n");
  if (options.exact && n > kSteinExactGuard && !options.force) {
    throw GuardError("exact stein_terms above n = " + std::to_string(kSteinExactGuard) +
                     " requires force");
  }
  if (options.coefficients.a_divisor <= 0 || options.coefficients.b_divisor <= 0) {
    throw std::invalid_argument("stein_terms: coefficient divisors must be positive");
  }

  const unsigned workers = std::max(1u, options.exact ? options.workers : options.plan.workers);
  std::vector<TermHistograms> partial(workers, TermHistograms(d));
  run_shards(workers, [&](unsigned shard) {
    PairEventScanner scanner(n, d);
    CycleCounter counter(n);
    TermHistograms& acc = partial[shard];
    auto visit = [&](std::span<const int> seq) {
      counter.scan(seq);
      acc.add(scanner.scan(seq), counter.counts());
    };
    if (options.exact) {
      for_each_parking_function_shard(n, shard, workers, visit, true);
    } else {
      const ShardRange range = shard_range(options.plan.samples, shard, workers);
      Rng rng = make_stream(options.plan.seed, shard);
      UniformSampler sampler(n);
      for (std::uint64_t i = range.begin; i < range.end; ++i) visit(sampler.draw(rng));
    }
  });
  TermHistograms all(d);
  for (const auto& p : partial) all.merge(p);

  SteinReport report;
  report.n = n;
  report.d = d;
  report.method = options.exact ? "exact" : "mc";
  report.samples = all.population;
  if (!options.exact) report.seed = options.plan.seed;
  report.workers = workers;
  report.coefficients = options.coefficients;
  report.total_bound = tv_upper_bound(n, d);
  if (all.population == 0) throw std::invalid_argument("stein_terms: no samples");

  const BigInt pairs = BigInt(n) * (n - 1) / 2;
  for (int k = 1; k <= d; ++k) {
    SteinTermRecord rec;
    rec.k = k;
    rec.lambda = ratio(1, k);
    rec.alpha = std::min(1.0, 1.4 / std::sqrt(rec.lambda.get_d()));
    rec.c_a = ExactRational(n) / (options.coefficients.a_divisor * k);
    rec.c_b = ExactRational(n) / (options.coefficients.b_divisor * k);
    const auto ta = absolute_mean(all.a[k - 1], all.population, [&](std::uint64_t cnt) -> ExactRational {
      return rec.lambda - rec.c_a * ratio(BigInt(static_cast<unsigned long>(cnt)), pairs);
    });
    const auto tb = absolute_mean(all.b[k - 1], all.population, [&](const std::pair<int, std::uint64_t>& key) -> ExactRational {
      return ExactRational(key.first) -
             rec.c_b * ratio(BigInt(static_cast<unsigned long>(key.second)), pairs);
    });
    rec.term_a = ta.mean.get_d();
    rec.term_b = tb.mean.get_d();
    if (options.exact) {
      rec.term_a_exact = ta.mean;
      rec.term_b_exact = tb.mean;
    } else {
      rec.term_a_error = ta.std_error;
      rec.term_b_error = tb.std_error;
    }
    rec.bound_a = lemma_bound_A(n, k, d);
    rec.bound_b = lemma_bound_B(n, k, d);
    report.terms.push_back(std::move(rec));
  }
  return report;
}

std::map<ProfilePair, std::uint64_t> exchangeable_pair_law(int n, bool force) {
  std::map<ProfilePair, std::uint64_t> law;
  for_each_parking_function(
      n,
      [&](std::span<const int> seq) {
        const PrefSeq pi(std::vector<int>(seq.begin(), seq.end()));
        const CycleProfile before = cycle_profile(pi);
        for (int a = 1; a <= n; ++a) {
          for (int b = a + 1; b <= n; ++b) {
            ++law[{before.counts, cycle_profile(transpose_entries(pi, a, b)).counts}];
          }
        }
      },
      force);
  return law;
}

}  // namespace pfcycles
