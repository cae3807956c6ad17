// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

// Test-only references computed straight from the definitions with plain
// containers. Deliberately slow and independent of the library internals.

#pragma once

#include <bit>
#include <cstdint>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "consets/graph.hpp"

namespace consets::testing {

struct NaiveStats {
  std::uint64_t N = 0;
  std::uint64_t S = 0;
  std::uint64_t Q = 0;
  std::vector<std::uint64_t> rooted_count;
  std::vector<std::uint64_t> rooted_size_sum;
};

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> lists(g.order());
  for (auto [u, v] : g.edges()) {
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  return lists;
}

// BFS restricted to `members`; true iff every member is reached.
inline bool naive_connected(const std::vector<std::vector<int>>& lists,
                            const std::vector<bool>& members) {
  int start = -1;
  int total = 0;
  for (int v = 0; v < static_cast<int>(members.size()); ++v) {
    if (members[v]) {
      ++total;
      if (start < 0) start = v;
    }
  }
  if (start < 0) return false;
  std::vector<bool> seen(members.size(), false);
  std::queue<int> queue;
  queue.push(start);
  seen[start] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int w : lists[u]) {
      if (members[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == total;
}

inline NaiveStats naive_stats(const Graph& g) {
  const int n = g.order();
  const auto lists = adjacency_lists(g);
  NaiveStats out;
  out.rooted_count.assign(n, 0);
  out.rooted_size_sum.assign(n, 0);
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
    std::vector<bool> members(n);
    std::uint64_t k = 0;
    for (int v = 0; v < n; ++v) {
      members[v] = (subset >> v) & 1U;
      k += members[v] ? 1 : 0;
    }
    if (!naive_connected(lists, members)) continue;
    ++out.N;
    out.S += k;
    out.Q += k * k;
    for (int v = 0; v < n; ++v) {
      if (members[v]) {
        ++out.rooted_count[v];
        out.rooted_size_sum[v] += k;
      }
    }
  }
  return out;
}

// Smallest vertex set whose removal disconnects g (n - 1 if none exists).
inline int naive_vertex_connectivity(const Graph& g) {
  const int n = g.order();
  const auto lists = adjacency_lists(g);
  std::vector<bool> all(n, true);
  if (!naive_connected(lists, all)) return 0;
  int best = n - 1;
  for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << n); ++cut) {
    const int size = std::popcount(cut);
    if (size >= best || size > n - 2) continue;
    std::vector<bool> rest(n);
    for (int v = 0; v < n; ++v) rest[v] = !((cut >> v) & 1U);
    if (!naive_connected(lists, rest)) best = size;
  }
  return best;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution edge(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Random spanning tree plus independent extra edges with probability p.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  Graph g = random_graph(rng, n, p);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    g.add_edge(parent(rng), v);
  }
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// C_3 x K_2.
inline Graph prism_graph() {
  return Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace consets::testing
