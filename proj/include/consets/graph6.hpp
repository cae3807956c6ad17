// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "consets/graph.hpp"

namespace consets {

enum class Graph6ErrorKind {
  kEmpty,
  kBadCharacter,
  kZeroOrder,
  kOrderTooLarge,
  kTruncated,
  kTrailingData,
  kNonzeroPadding,
};

const char* to_string(Graph6ErrorKind kind);

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(Graph6ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Graph6ErrorKind kind() const { return kind_; }

 private:
  Graph6ErrorKind kind_;
};

/// Decodes one graph6 string (no ">>graph6<<" header, no newline).
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);

}  // namespace consets
