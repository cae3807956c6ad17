// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include "consets/generators.hpp"

#include <array>
#include <utility>

namespace consets {
namespace {

constexpr std::array<std::pair<GeneratorKind, const char*>, 7> kNames{{
    {GeneratorKind::kPath, "path"},
    {GeneratorKind::kCycle, "cycle"},
    {GeneratorKind::kComplete, "complete"},
    {GeneratorKind::kCompleteBipartite, "complete_bipartite"},
    {GeneratorKind::kHypercube, "hypercube"},
    {GeneratorKind::kStar, "star"},
    {GeneratorKind::kDoubleStar, "double_star"},
}};

void require_order(long long n, const char* what) {
  if (n < 1 || n > kMaxOrder) {
    throw GraphError(std::string(what) + ": order " + std::to_string(n) +
                     " outside [1, 64]");
  }
}

void require_nonnegative(int value, const char* what) {
  if (value < 0) throw GraphError(std::string(what) + ": negative parameter");
}

}  // namespace

std::optional<GeneratorKind> generator_kind_from_string(std::string_view name) {
  for (const auto& [kind, label] : kNames) {
    if (name == label) return kind;
  }
  return std::nullopt;
}

const char* to_string(GeneratorKind kind) {
  for (const auto& [k, label] : kNames) {
    if (k == kind) return label;
  }
  return "unknown";
}

Graph path_graph(int n) {
  require_order(n, "path");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle: needs n >= 3, got " + std::to_string(n));
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  require_order(n, "complete");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  require_nonnegative(a, "complete_bipartite");
  require_nonnegative(b, "complete_bipartite");
  require_order(static_cast<long long>(a) + b, "complete_bipartite");
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph hypercube_graph(int d) {
  if (d < 0 || d > 6) {
    throw GraphError("hypercube: dimension must be in [0, 6], got " + std::to_string(d));
  }
  const int n = 1 << d;
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int bit = 0; bit < d; ++bit) {
      const int v = u ^ (1 << bit);
      if (u < v) g.add_edge(u, v);
    }
  }
  return g;
}

Graph star_graph(int k) {
  require_nonnegative(k, "star");
  require_order(static_cast<long long>(k) + 1, "star");
  Graph g(k + 1);
  for (int leaf = 1; leaf <= k; ++leaf) g.add_edge(0, leaf);
  return g;
}

Graph double_star_graph(int a, int b) {
  require_nonnegative(a, "double_star");
  require_nonnegative(b, "double_star");
  require_order(static_cast<long long>(a) + b + 2, "double_star");
  Graph g(a + b + 2);
  g.add_edge(0, 1);
  for (int i = 0; i < a; ++i) g.add_edge(0, 2 + i);
  for (int i = 0; i < b; ++i) g.add_edge(1, 2 + a + i);
  return g;
}

Graph make_generator(GeneratorKind kind, std::span<const int> params) {
  const std::size_t want =
      (kind == GeneratorKind::kCompleteBipartite || kind == GeneratorKind::kDoubleStar) ? 2
                                                                                        : 1;
  if (params.size() != want) {
    throw GraphError(std::string(to_string(kind)) + ": expected " + std::to_string(want) +
                     " parameter(s), got " + std::to_string(params.size()));
  }
  switch (kind) {
    case GeneratorKind::kPath: return path_graph(params[0]);
    case GeneratorKind::kCycle: return cycle_graph(params[0]);
    case GeneratorKind::kComplete: return complete_graph(params[0]);
    case GeneratorKind::kCompleteBipartite:
      return complete_bipartite_graph(params[0], params[1]);
    case GeneratorKind::kHypercube: return hypercube_graph(params[0]);
    case GeneratorKind::kStar: return star_graph(params[0]);
    case GeneratorKind::kDoubleStar: return double_star_graph(params[0], params[1]);
  }
  throw GraphError("unknown generator");
}

}  // namespace consets
