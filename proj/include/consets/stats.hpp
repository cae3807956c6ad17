// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "consets/graph.hpp"
#include "consets/kernels.hpp"
#include "consets/ratio.hpp"

namespace consets {

/// Exact statistics over the connected sets C(G) of a graph.
///
///   N = |C(G)|, S = sum of |U|, Q = sum of |U|^2,
///   rooted_count[v] = #{U in C(G) : v in U}, rooted_size_sum[v] = sum of |U| over those.
struct ConnStats {
  int n = 0;
  BigInt N = 0;
  BigInt S = 0;
  BigInt Q = 0;
  std::vector<BigInt> rooted_count;
  std::vector<BigInt> rooted_size_sum;
  /// True iff V itself is a connected set, i.e. the graph is connected.
  bool contains_full_set = false;

  ConnStats() = default;
  explicit ConnStats(int order)
      : n(order), rooted_count(order), rooted_size_sum(order) {}

  /// Connected sets other than V: N' and S'.
  BigInt count_proper() const { return N - (contains_full_set ? 1 : 0); }
  BigInt size_sum_proper() const { return S - (contains_full_set ? n : 0); }
  BigInt square_sum_proper() const {
    return Q - (contains_full_set ? BigInt(n) * n : BigInt(0));
  }

  /// Folds machine-word counters into the exact totals. `tally.by_size`
  /// gives N, S and Q; a set of size n means V was seen.
  void absorb(const kernels::SetTally& tally);

  ConnStats& operator+=(const ConnStats& other);

  friend bool operator==(const ConnStats&, const ConnStats&) = default;
};

/// Enumeration stopped after more connected sets than the budget allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget);
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

struct EnumerationOptions {
  /// Maximum number of connected sets before BudgetExceeded is thrown.
  std::uint64_t budget = kUnlimitedBudget;
  /// Worker threads for anchor-parallel counting; 1 is a single pass.
  int threads = 1;
};

namespace detail {

// One anchor of the include/exclude recursion: every connected set whose
// smallest vertex is the anchor is passed to `emit` exactly once. The
// current set is emitted before its extensions, so {anchor} comes first.
template <typename Emit>
class AnchoredGrower {
 public:
  AnchoredGrower(const Graph& g, Emit& emit) : adj_(g.adjacency_data()), emit_(emit) {}

  void run(int anchor) {
    const std::uint64_t root = std::uint64_t{1} << anchor;
    const std::uint64_t blocked = low_bits(anchor) | root;
    const std::uint64_t frontier = adj_[anchor] & ~blocked;
    grow(root, frontier, blocked | frontier);
  }

 private:
  // `seen` holds the current set, the frontier, every excluded vertex and
  // everything below the anchor. Each call emits exactly one set; the loop
  // walks the frontier, and iteration j includes the j-th frontier vertex
  // with the earlier ones excluded.
  void grow(std::uint64_t set, std::uint64_t frontier, std::uint64_t seen) {
    emit_(set);
    while (frontier != 0) {
      const std::uint64_t bit = frontier & (~frontier + 1);
      frontier &= ~bit;
      const std::uint64_t fresh = adj_[std::countr_zero(bit)] & ~seen;
      grow(set | bit, frontier | fresh, seen | fresh);
    }
  }

  const std::uint64_t* adj_;
  Emit& emit_;
};

}  // namespace detail

/// Calls `visit(VertexSet)` once for every connected set of `g`: all sets
/// whose minimum vertex is 0, then 1, and so on, in a deterministic order.
template <typename Visit>
void for_each_connected_set(const Graph& g, Visit&& visit) {
  auto emit = [&visit](std::uint64_t mask) { visit(VertexSet(mask)); };
  detail::AnchoredGrower<decltype(emit)> grower(g, emit);
  for (int anchor = 0; anchor < g.order(); ++anchor) grower.run(anchor);
}

/// Same sequence as for_each_connected_set restricted to one anchor.
template <typename Visit>
void for_each_connected_set_anchored(const Graph& g, int anchor, Visit&& visit) {
  auto emit = [&visit](std::uint64_t mask) { visit(VertexSet(mask)); };
  detail::AnchoredGrower<decltype(emit)> grower(g, emit);
  grower.run(anchor);
}

void enumerate_connected_sets(const Graph& g, const std::function<void(VertexSet)>& visit);

/// Materialized enumeration, for tests and small graphs.
std::vector<VertexSet> list_connected_sets(const Graph& g);

/// Single-pass exact statistics; sets are never stored.
ConnStats connected_set_stats(const Graph& g, const EnumerationOptions& options = {});

/// Same, with an explicit kernel table (used by equivalence tests).
ConnStats connected_set_stats(const Graph& g, const EnumerationOptions& options,
                              const kernels::KernelTable& table);

inline constexpr int kBruteForceMaxOrder = 20;

/// Tests all 2^n - 1 nonempty subsets by traversal. Throws GraphError for n > 20.
ConnStats brute_force_stats(const Graph& g);
ConnStats brute_force_stats(const Graph& g, const kernels::KernelTable& table);

/// A(G) = S / N.
Ratio average_order(const ConnStats& st);
/// D(G) = S / (n N).
Ratio density(const ConnStats& st);
/// A(G, v) = S(G, v) / N(G, v). Throws GraphError for v out of range.
Ratio rooted_average(const ConnStats& st, int v);

}  // namespace consets
