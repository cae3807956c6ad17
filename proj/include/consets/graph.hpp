// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace consets {

inline constexpr int kMaxOrder = 64;

/// Thrown for out-of-range vertices, orders and generator parameters.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mask with the low `n` bits set; `n` may be 64.
constexpr std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// A subset of the vertices of a graph on at most 64 vertices.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}

  static constexpr VertexSet singleton(int v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int v) const { return (mask_ >> v) & 1U; }
  /// Smallest vertex in the set; undefined for the empty set.
  constexpr int min_vertex() const { return std::countr_zero(mask_); }

  std::vector<int> vertices() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Simple undirected graph on 1..64 vertices stored as adjacency bitmasks.
///
/// The adjacency rows are kept symmetric and loop-free by every mutator, and
/// bits at positions >= order() are always zero.
class Graph {
 public:
  /// Edgeless graph on `n` vertices. Throws GraphError unless 1 <= n <= 64.
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int edge_count() const;
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  std::uint64_t vertex_mask() const { return low_bits(n_); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Pointer to the first of order() adjacency rows (kernel input).
  const std::uint64_t* adjacency_data() const { return adj_.data(); }

  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_;
  std::array<std::uint64_t, kMaxOrder> adj_{};
};

/// Vertices reachable from `seed` using only vertices of `within`.
/// `seed` must be a member of `within`.
std::uint64_t component_of(const Graph& g, int seed, std::uint64_t within);

/// True iff the subgraph induced by `set` is connected (false for empty).
bool induces_connected(const Graph& g, VertexSet set);

bool is_connected(const Graph& g);

/// Induced subgraph on V \ {v}, remaining vertices compacted in order.
Graph delete_vertex(const Graph& g, int v);

int min_degree(const Graph& g);

/// Connected with n <= 2, or exactly two degree-1 vertices and the rest degree 2.
bool is_path_graph(const Graph& g);

/// Connected and n - 1 edges.
bool is_tree(const Graph& g);

/// Size of a minimum vertex cut, n - 1 for complete graphs, 0 if disconnected.
int vertex_connectivity(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
/// s != t, stopping early once `limit` paths are found.
int local_vertex_connectivity(const Graph& g, int s, int t, int limit = kMaxOrder);

}  // namespace consets
