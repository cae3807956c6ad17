// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "consets/graph.hpp"

namespace consets {

enum class GeneratorKind {
  kPath,
  kCycle,
  kComplete,
  kCompleteBipartite,
  kHypercube,
  kStar,
  kDoubleStar,
};

std::optional<GeneratorKind> generator_kind_from_string(std::string_view name);
const char* to_string(GeneratorKind kind);

// Canonical labelings:
//   path(n)                 edges {i, i+1}
//   cycle(n)                path(n) plus {n-1, 0}, n >= 3
//   complete(n)
//   complete_bipartite(a,b) parts {0..a-1} and {a..a+b-1}
//   hypercube(d)            2^d vertices, masks at Hamming distance 1
//   star(k)                 center 0, leaves 1..k
//   double_star(a,b)        centers 0 and 1, a leaves on 0 then b leaves on 1
//
// Throws GraphError for a wrong parameter count or an out-of-range order.
Graph make_generator(GeneratorKind kind, std::span<const int> params);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph hypercube_graph(int d);
Graph star_graph(int k);
Graph double_star_graph(int a, int b);

}  // namespace consets
