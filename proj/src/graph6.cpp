// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include "consets/graph6.hpp"

namespace consets {
namespace {

constexpr int kBias = 63;

bool printable(char c) { return c >= 63 && c <= 126; }

[[noreturn]] void fail(Graph6ErrorKind kind, const std::string& what) {
  throw Graph6Error(kind, std::string("graph6: ") + what);
}

}  // namespace

const char* to_string(Graph6ErrorKind kind) {
  switch (kind) {
    case Graph6ErrorKind::kEmpty: return "empty";
    case Graph6ErrorKind::kBadCharacter: return "bad character";
    case Graph6ErrorKind::kZeroOrder: return "zero order";
    case Graph6ErrorKind::kOrderTooLarge: return "order too large";
    case Graph6ErrorKind::kTruncated: return "truncated";
    case Graph6ErrorKind::kTrailingData: return "trailing data";
    case Graph6ErrorKind::kNonzeroPadding: return "nonzero padding";
  }
  return "unknown";
}

Graph parse_graph6(std::string_view line) {
  if (line.empty()) fail(Graph6ErrorKind::kEmpty, "empty string");
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (!printable(line[i])) {
      fail(Graph6ErrorKind::kBadCharacter,
           "byte " + std::to_string(static_cast<unsigned char>(line[i])) +
               " at offset " + std::to_string(i) + " is outside 63..126");
    }
  }

  std::size_t pos = 0;
  long long n = 0;
  if (line[0] != '~') {
    n = line[0] - kBias;
    pos = 1;
  } else if (line.size() >= 2 && line[1] == '~') {
    // 8-byte form, n >= 258048; always beyond the order cap.
    fail(Graph6ErrorKind::kOrderTooLarge, "order exceeds 64");
  } else {
    if (line.size() < 4) fail(Graph6ErrorKind::kTruncated, "order field cut short");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - kBias);
    pos = 4;
  }
  if (n == 0) fail(Graph6ErrorKind::kZeroOrder, "order 0 is not a graph");
  if (n > kMaxOrder) {
    fail(Graph6ErrorKind::kOrderTooLarge, "order " + std::to_string(n) + " exceeds 64");
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  const std::size_t have = line.size() - pos;
  if (have < need) {
    fail(Graph6ErrorKind::kTruncated, "expected " + std::to_string(need) +
                                          " edge bytes, found " + std::to_string(have));
  }
  if (have > need) {
    fail(Graph6ErrorKind::kTrailingData,
         std::to_string(have - need) + " byte(s) after the edge field");
  }

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int last = line[pos + need - 1] - kBias;
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) {
      fail(Graph6ErrorKind::kNonzeroPadding, "padding bits must be zero");
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used != 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

}  // namespace consets
