// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include <bit>

#include "consets/kernels.hpp"

namespace consets::kernels::detail {

void tally_sets_scalar(std::span<const std::uint64_t> masks, int /*n*/, SetTally& tally) {
  for (const std::uint64_t mask : masks) {
    const int k = std::popcount(mask);
    ++tally.by_size[k];
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      ++tally.rooted_count[v];
      tally.rooted_size_sum[v] += static_cast<std::uint64_t>(k);
    }
  }
  tally.sets += masks.size();
}

void closure_batch_scalar(std::span<const std::uint64_t> adj,
                          std::span<const std::uint64_t> subsets,
                          std::span<std::uint64_t> reach) {
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const std::uint64_t within = subsets[i];
    std::uint64_t reached = within & (~within + 1);
    std::uint64_t frontier = reached;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m != 0; m &= m - 1) {
        next |= adj[std::countr_zero(m)];
      }
      frontier = next & within & ~reached;
      reached |= frontier;
    }
    reach[i] = reached;
  }
}

}  // namespace consets::kernels::detail
