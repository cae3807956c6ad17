// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

// Vertex connectivity by unit-capacity max flow on the split graph: every
// vertex v becomes in(v) -> out(v) with capacity 1 and every edge {u, v}
// becomes arcs out(u) -> in(v) and out(v) -> in(u).

#include <algorithm>
#include <array>
#include <bit>

#include "consets/graph.hpp"

namespace consets {
namespace {

class SplitFlow {
 public:
  SplitFlow(const Graph& g, int s, int t) : g_(g), s_(s), t_(t) {}

  // One BFS augmentation from out(s) to in(t) in the residual graph.
  bool augment() {
    constexpr int kNone = -1;
    // Node ids: in(v) = v, out(v) = kMaxOrder + v.
    std::array<int, 2 * kMaxOrder> parent;
    parent.fill(kNone);
    std::uint64_t seen_in = std::uint64_t{1} << s_;
    std::uint64_t seen_out = std::uint64_t{1} << s_;
    std::array<int, 2 * kMaxOrder> queue;
    int head = 0;
    int tail = 0;
    queue[tail++] = kMaxOrder + s_;
    bool found = false;
    while (head < tail && !found) {
      const int node = queue[head++];
      if (node >= kMaxOrder) {
        const int v = node - kMaxOrder;
        // Forward arcs out(v) -> in(w) with no flow yet.
        std::uint64_t next = g_.neighbors(v) & ~flow_out_[v] & ~seen_in;
        // Reverse of in(v) -> out(v).
        if (((through_ >> v) & 1U) && !((seen_in >> v) & 1U)) {
          next |= std::uint64_t{1} << v;
        }
        for (; next != 0; next &= next - 1) {
          const int w = std::countr_zero(next);
          seen_in |= std::uint64_t{1} << w;
          parent[w] = node;
          if (w == t_) {
            found = true;
            break;
          }
          queue[tail++] = w;
        }
      } else {
        const int v = node;
        // Forward in(v) -> out(v) when v is not saturated.
        if (!((through_ >> v) & 1U) && !((seen_out >> v) & 1U)) {
          seen_out |= std::uint64_t{1} << v;
          parent[kMaxOrder + v] = node;
          queue[tail++] = kMaxOrder + v;
        }
        // Reverse arcs in(v) -> out(u) for u carrying flow into v.
        for (std::uint64_t next = flow_in_[v] & ~seen_out; next != 0;
             next &= next - 1) {
          const int u = std::countr_zero(next);
          seen_out |= std::uint64_t{1} << u;
          parent[kMaxOrder + u] = node;
          queue[tail++] = kMaxOrder + u;
        }
      }
    }
    if (!found) return false;

    for (int node = t_; node != kMaxOrder + s_;) {
      const int prev = parent[node];
      if (prev >= kMaxOrder && node < kMaxOrder) {
        const int u = prev - kMaxOrder;
        const int w = node;
        if (u == w) {
          through_ &= ~(std::uint64_t{1} << u);
        } else {
          flow_out_[u] |= std::uint64_t{1} << w;
          flow_in_[w] |= std::uint64_t{1} << u;
        }
      } else {
        // in(v) -> out(x): either the split arc (x == v) or a cancelled edge arc.
        const int v = prev;
        const int x = node - kMaxOrder;
        if (x == v) {
          through_ |= std::uint64_t{1} << v;
        } else {
          flow_out_[x] &= ~(std::uint64_t{1} << v);
          flow_in_[v] &= ~(std::uint64_t{1} << x);
        }
      }
      node = prev;
    }
    return true;
  }

 private:
  const Graph& g_;
  int s_;
  int t_;
  std::uint64_t through_ = 0;
  std::array<std::uint64_t, kMaxOrder> flow_out_{};
  std::array<std::uint64_t, kMaxOrder> flow_in_{};
};

}  // namespace

int local_vertex_connectivity(const Graph& g, int s, int t, int limit) {
  if (s == t || g.has_edge(s, t)) {
    throw GraphError("local vertex connectivity needs distinct non-adjacent vertices");
  }
  SplitFlow flow(g, s, t);
  int paths = 0;
  while (paths < limit && flow.augment()) ++paths;
  return paths;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;

  // A minimum cut misses one of the vertices 0..kappa; the smallest such
  // vertex i is separated from some vertex j > i by that cut.
  int best = min_degree(g);
  for (int i = 0; i < n && i <= best; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      best = std::min(best, local_vertex_connectivity(g, i, j, best));
    }
  }
  return best;
}

}  // namespace consets
