// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "consets/stats.hpp"

namespace consets {
namespace {

constexpr std::size_t kBatch = 512;
// Word counters are drained well before rooted_size_sum could wrap.
constexpr std::uint64_t kDrainEvery = std::uint64_t{1} << 40;

// Shared across workers of one enumeration.
struct BudgetGate {
  std::uint64_t budget;
  std::atomic<std::uint64_t> spent{0};
  std::atomic<bool> tripped{false};

  void charge(std::uint64_t sets) {
    const std::uint64_t before = spent.fetch_add(sets, std::memory_order_relaxed);
    if (sets > budget || before > budget - sets) {
      tripped.store(true, std::memory_order_relaxed);
      throw BudgetExceeded(budget);
    }
    if (tripped.load(std::memory_order_relaxed)) throw BudgetExceeded(budget);
  }
};

class StatsSink {
 public:
  StatsSink(int n, const kernels::KernelTable& table, BudgetGate& gate)
      : n_(n), table_(table), gate_(gate), stats_(n) {}

  void operator()(std::uint64_t mask) {
    buffer_[fill_++] = mask;
    if (fill_ == kBatch) flush();
  }

  ConnStats finish() {
    flush();
    stats_.absorb(tally_);
    tally_ = {};
    return std::move(stats_);
  }

 private:
  void flush() {
    if (fill_ == 0) return;
    gate_.charge(fill_);
    table_.tally_sets(std::span<const std::uint64_t>(buffer_.data(), fill_), n_, tally_);
    fill_ = 0;
    if (tally_.sets >= kDrainEvery) {
      stats_.absorb(tally_);
      tally_ = {};
    }
  }

  int n_;
  const kernels::KernelTable& table_;
  BudgetGate& gate_;
  ConnStats stats_;
  kernels::SetTally tally_;
  std::array<std::uint64_t, kBatch> buffer_{};
  std::size_t fill_ = 0;
};

ConnStats count_anchors_sequential(const Graph& g, const kernels::KernelTable& table,
                                   BudgetGate& gate) {
  StatsSink sink(g.order(), table, gate);
  detail::AnchoredGrower<StatsSink> grower(g, sink);
  for (int anchor = 0; anchor < g.order(); ++anchor) grower.run(anchor);
  return sink.finish();
}

// Anchors are handed out dynamically; totals are sums, so the merged result
// does not depend on which worker took which anchor.
ConnStats count_anchors_parallel(const Graph& g, const kernels::KernelTable& table,
                                 BudgetGate& gate, int threads) {
  std::atomic<int> next_anchor{0};
  std::mutex merge_mutex;
  ConnStats total(g.order());
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      StatsSink sink(g.order(), table, gate);
      detail::AnchoredGrower<StatsSink> grower(g, sink);
      for (int anchor = next_anchor++; anchor < g.order(); anchor = next_anchor++) {
        grower.run(anchor);
      }
      ConnStats part = sink.finish();
      std::lock_guard lock(merge_mutex);
      total += part;
    } catch (...) {
      gate.tripped.store(true);
      std::lock_guard lock(merge_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  std::vector<std::jthread> pool;
  const int count = std::min(threads, g.order());
  pool.reserve(count);
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return total;
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t budget)
    : std::runtime_error("enumeration budget of " + std::to_string(budget) +
                         " connected sets exceeded"),
      budget_(budget) {}

void enumerate_connected_sets(const Graph& g, const std::function<void(VertexSet)>& visit) {
  for_each_connected_set(g, visit);
}

std::vector<VertexSet> list_connected_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_connected_set(g, [&out](VertexSet s) { out.push_back(s); });
  return out;
}

ConnStats connected_set_stats(const Graph& g, const EnumerationOptions& options,
                              const kernels::KernelTable& table) {
  BudgetGate gate{options.budget};
  if (options.threads > 1 && g.order() > 1) {
    return count_anchors_parallel(g, table, gate, options.threads);
  }
  return count_anchors_sequential(g, table, gate);
}

ConnStats connected_set_stats(const Graph& g, const EnumerationOptions& options) {
  return connected_set_stats(g, options, kernels::active_kernels());
}

}  // namespace consets
