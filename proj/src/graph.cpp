// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include "consets/graph.hpp"

#include <algorithm>

namespace consets {

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) {
    throw GraphError("graph order must be in [1, 64], got " + std::to_string(n));
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n_));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (std::uint64_t m = adj_[u] & ~low_bits(u + 1); m != 0; m &= m - 1) {
      out.emplace_back(u, std::countr_zero(m));
    }
  }
  return out;
}

std::uint64_t component_of(const Graph& g, int seed, std::uint64_t within) {
  std::uint64_t reached = std::uint64_t{1} << seed;
  std::uint64_t frontier = reached;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m != 0; m &= m - 1) {
      next |= g.neighbors(std::countr_zero(m));
    }
    frontier = next & within & ~reached;
    reached |= frontier;
  }
  return reached;
}

bool induces_connected(const Graph& g, VertexSet set) {
  if (set.empty()) return false;
  return component_of(g, set.min_vertex(), set.mask()) == set.mask();
}

bool is_connected(const Graph& g) {
  return induces_connected(g, VertexSet(g.vertex_mask()));
}

Graph delete_vertex(const Graph& g, int v) {
  if (g.order() < 2) throw GraphError("cannot delete a vertex of K_1");
  if (v < 0 || v >= g.order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(g.order()));
  }
  const std::uint64_t below = low_bits(v);
  auto compact = [&](std::uint64_t row) {
    return (row & below) | ((row >> 1) & ~below);
  };
  Graph out(g.order() - 1);
  for (int u = 0, w = 0; u < g.order(); ++u) {
    if (u == v) continue;
    for (std::uint64_t m = compact(g.neighbors(u)) & ~low_bits(w + 1); m != 0;
         m &= m - 1) {
      out.add_edge(w, std::countr_zero(m));
    }
    ++w;
  }
  return out;
}

int min_degree(const Graph& g) {
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_tree(const Graph& g) {
  return g.edge_count() == g.order() - 1 && is_connected(g);
}

bool is_path_graph(const Graph& g) {
  if (!is_connected(g)) return false;
  if (g.order() <= 2) return true;
  int leaves = 0;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d == 1) {
      ++leaves;
    } else if (d != 2) {
      return false;
    }
  }
  return leaves == 2;
}

}  // namespace consets
