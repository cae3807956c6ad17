// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

// Reference statistics from the definition: every nonempty subset is tested
// by traversal and counted directly. Shares nothing with the enumerator.

#include <array>
#include <bit>

#include "consets/stats.hpp"

namespace consets {

ConnStats brute_force_stats(const Graph& g, const kernels::KernelTable& table) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw GraphError("brute force oracle limited to n <= 20, got " + std::to_string(n));
  }
  const std::span<const std::uint64_t> adj(g.adjacency_data(), n);

  std::uint64_t count = 0;
  std::uint64_t size_sum = 0;
  std::uint64_t square_sum = 0;
  std::array<std::uint64_t, kBruteForceMaxOrder> rooted_count{};
  std::array<std::uint64_t, kBruteForceMaxOrder> rooted_size_sum{};

  constexpr std::size_t kBatch = 1024;
  std::array<std::uint64_t, kBatch> subsets;
  std::array<std::uint64_t, kBatch> reach;
  const std::uint64_t last = low_bits(n);
  for (std::uint64_t start = 1; start <= last; start += kBatch) {
    const std::size_t len =
        static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, last - start + 1));
    for (std::size_t i = 0; i < len; ++i) subsets[i] = start + i;
    table.closure_batch(adj, std::span<const std::uint64_t>(subsets.data(), len),
                        std::span<std::uint64_t>(reach.data(), len));
    for (std::size_t i = 0; i < len; ++i) {
      if (reach[i] != subsets[i]) continue;
      const std::uint64_t k = std::popcount(subsets[i]);
      ++count;
      size_sum += k;
      square_sum += k * k;
      for (int v = 0; v < n; ++v) {
        if ((subsets[i] >> v) & 1U) {
          ++rooted_count[v];
          rooted_size_sum[v] += k;
        }
      }
    }
  }

  ConnStats st(n);
  st.N = count;
  st.S = size_sum;
  st.Q = square_sum;
  for (int v = 0; v < n; ++v) {
    st.rooted_count[v] = rooted_count[v];
    st.rooted_size_sum[v] = rooted_size_sum[v];
  }
  st.contains_full_set = component_of(g, 0, last) == last;
  return st;
}

ConnStats brute_force_stats(const Graph& g) {
  return brute_force_stats(g, kernels::active_kernels());
}

}  // namespace consets
