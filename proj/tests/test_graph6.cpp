// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <string>

#include "doctest.h"

#include "consets/generators.hpp"
#include "consets/graph6.hpp"
#include "oracle.hpp"

using namespace consets;

namespace {

Graph6ErrorKind error_kind(const std::string& text) {
  try {
    parse_graph6(text);
  } catch (const Graph6Error& e) {
    return e.kind();
  }
  FAIL("expected a parse error for '" << text << "'");
  return Graph6ErrorKind::kEmpty;
}

}  // namespace

TEST_CASE("graph6 decoding of small graphs") {
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3 == complete_graph(3));

  const Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);

  // Edge bits (0,1),(0,2),(1,2): 'g' = 63 + 0b101000 is the path 1-0-2.
  CHECK(parse_graph6("Bg") == path_graph(3));
  CHECK(parse_graph6("B?") == Graph(3));
}

TEST_CASE("graph6 encoding") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(path_graph(2)) == "A_");
  CHECK(to_graph6(testing::petersen_graph()).size() == 1 + 8);
  // n >= 63 switches to the four-byte order field.
  CHECK(to_graph6(Graph(63)).substr(0, 4) == "~??~");
  CHECK(to_graph6(Graph(64)).substr(0, 4) == "~?@?");
}

TEST_CASE("graph6 errors are distinguished") {
  CHECK(error_kind("B?x") == Graph6ErrorKind::kTrailingData);
  CHECK(error_kind("") == Graph6ErrorKind::kEmpty);
  CHECK(error_kind("?") == Graph6ErrorKind::kZeroOrder);
  CHECK(error_kind("B w") == Graph6ErrorKind::kBadCharacter);
  CHECK(error_kind(std::string("B\x7f")) == Graph6ErrorKind::kBadCharacter);
  CHECK(error_kind("Dq") == Graph6ErrorKind::kTruncated);
  CHECK(error_kind("~?@A") == Graph6ErrorKind::kOrderTooLarge);
  CHECK(error_kind("~~??????") == Graph6ErrorKind::kOrderTooLarge);
  CHECK(error_kind("~?@") == Graph6ErrorKind::kTruncated);
  // Three edge bits then three padding bits; 'x' sets a padding bit.
  CHECK(error_kind("Bx") == Graph6ErrorKind::kNonzeroPadding);
}

TEST_CASE("graph6 round trip on random graphs of every order") {
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 64; ++n) {
    for (double p : {0.0, 0.3, 0.7, 1.0}) {
      const Graph g = testing::random_graph(rng, n, p);
      const std::string text = to_graph6(g);
      CHECK(parse_graph6(text) == g);
      CHECK(to_graph6(parse_graph6(text)) == text);
    }
  }
}
