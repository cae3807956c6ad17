// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "consets/graph.hpp"

namespace consets::harness {

struct InputGraph {
  std::size_t line = 0;  // 1-based line number in the source
  Graph graph;
};

struct InputError {
  std::size_t line = 0;
  std::string message;
};

/// Reads graph6 lines in chunks. Blank lines and ">>" header lines are
/// skipped; a ">>graph6<<" prefix in front of a graph is stripped.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  /// Appends up to `max_graphs` graphs. Stops at the first malformed line
  /// and returns its error; graphs read before it are still appended.
  std::optional<InputError> read_chunk(std::vector<InputGraph>& out, std::size_t max_graphs);

  bool done() const { return done_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  bool done_ = false;
};

/// Runs `task(i)` for i in [0, count) on `jobs` threads. Each index is
/// processed exactly once; callers write results into slot i.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task);

}  // namespace consets::harness
