// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "consets/generators.hpp"
#include "consets/stats.hpp"
#include "oracle.hpp"

using namespace consets;

namespace {

std::set<std::uint64_t> masks_of(const std::vector<VertexSet>& sets) {
  std::set<std::uint64_t> out;
  for (auto s : sets) out.insert(s.mask());
  return out;
}

std::vector<BigInt> big(std::initializer_list<int> values) {
  return {values.begin(), values.end()};
}

void check_matches_naive(const ConnStats& st, const testing::NaiveStats& naive) {
  CHECK(st.N == naive.N);
  CHECK(st.S == naive.S);
  CHECK(st.Q == naive.Q);
  REQUIRE(st.rooted_count.size() == naive.rooted_count.size());
  for (std::size_t v = 0; v < naive.rooted_count.size(); ++v) {
    CHECK(st.rooted_count[v] == naive.rooted_count[v]);
    CHECK(st.rooted_size_sum[v] == naive.rooted_size_sum[v]);
  }
}

std::vector<kernels::Isa> available_isas() {
  std::vector<kernels::Isa> out{kernels::Isa::kScalar};
  if (kernels::isa_available(kernels::Isa::kAvx2)) out.push_back(kernels::Isa::kAvx2);
  return out;
}

}  // namespace

TEST_CASE("connected sets of tiny graphs") {
  CHECK(masks_of(list_connected_sets(path_graph(3))) ==
        std::set<std::uint64_t>{0b001, 0b010, 0b100, 0b011, 0b110, 0b111});
  CHECK(list_connected_sets(path_graph(3)).size() == 6);

  const auto k3 = list_connected_sets(complete_graph(3));
  CHECK(k3.size() == 7);
  CHECK(masks_of(k3).size() == 7);

  const auto k1 = list_connected_sets(Graph(1));
  REQUIRE(k1.size() == 1);
  CHECK(k1.front() == VertexSet(1));
}

TEST_CASE("enumeration order is anchored and deterministic") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 12, 0.35);
    const auto first = list_connected_sets(g);
    CHECK(first == list_connected_sets(g));
    int last_anchor = -1;
    for (auto s : first) {
      CHECK_FALSE(s.empty());
      CHECK(induces_connected(g, s));
      if (s.min_vertex() != last_anchor) {
        CHECK(s.min_vertex() > last_anchor);
        // Each anchor block opens with the singleton.
        CHECK(s == VertexSet::singleton(s.min_vertex()));
        last_anchor = s.min_vertex();
      }
    }
    CHECK(masks_of(first).size() == first.size());
    CHECK(first.size() == testing::naive_stats(g).N);

    std::vector<VertexSet> via_function;
    enumerate_connected_sets(g, [&](VertexSet s) { via_function.push_back(s); });
    CHECK(via_function == first);
  }
}

TEST_CASE("statistics of small graphs") {
  const ConnStats p3 = connected_set_stats(path_graph(3));
  CHECK(p3.N == 6);
  CHECK(p3.S == 10);
  CHECK(p3.Q == 20);
  CHECK(p3.rooted_count == big({3, 4, 3}));
  CHECK(p3.rooted_size_sum == big({6, 8, 6}));
  CHECK(p3.contains_full_set);

  const ConnStats k3 = connected_set_stats(complete_graph(3));
  CHECK(k3.N == 7);
  CHECK(k3.S == 12);
  CHECK(k3.Q == 24);
  CHECK(k3.rooted_count == big({4, 4, 4}));
  CHECK(k3.rooted_size_sum == big({8, 8, 8}));

  const ConnStats k1 = connected_set_stats(Graph(1));
  CHECK(k1.N == 1);
  CHECK(k1.S == 1);
  CHECK(k1.Q == 1);

  const ConnStats two = connected_set_stats(Graph(2));
  CHECK(two.N == 2);
  CHECK_FALSE(two.contains_full_set);
  CHECK(two.count_proper() == 2);
  CHECK(two.size_sum_proper() == 2);
}

TEST_CASE("brute force oracle values") {
  const ConnStats c4 = brute_force_stats(cycle_graph(4));
  CHECK(c4.N == 13);
  CHECK(c4.S == 28);
  CHECK(c4.Q == 72);

  // Subpaths of P_4: l * (4 - l + 1) of each length l.
  const ConnStats p4 = brute_force_stats(path_graph(4));
  int n_paths = 0, s_paths = 0, q_paths = 0;
  for (int l = 1; l <= 4; ++l) {
    n_paths += 5 - l;
    s_paths += l * (5 - l);
    q_paths += l * l * (5 - l);
  }
  CHECK(p4.N == n_paths);
  CHECK(p4.N == 10);
  CHECK(p4.S == s_paths);
  CHECK(p4.S == 20);
  CHECK(p4.Q == q_paths);
  CHECK(p4.Q == 50);

  const ConnStats k4 = brute_force_stats(complete_graph(4));
  CHECK(k4.N == 15);
  CHECK(k4.S == 32);
  CHECK(k4.Q == 80);

  CHECK_THROWS_AS(brute_force_stats(path_graph(21)), GraphError);
  CHECK(brute_force_stats(path_graph(20)).N == 210);
}

TEST_CASE("average, density and rooted averages") {
  const ConnStats p3 = connected_set_stats(path_graph(3));
  CHECK(average_order(p3) == Ratio(5, 3));
  CHECK(rooted_average(p3, 1) == Ratio(2));

  const ConnStats k3 = connected_set_stats(complete_graph(3));
  CHECK(average_order(k3) == Ratio(12, 7));
  CHECK(density(k3) == Ratio(4, 7));

  CHECK(average_order(connected_set_stats(Graph(1))) == Ratio(1));
  CHECK(density(connected_set_stats(cycle_graph(4))) == Ratio(7, 13));

  const ConnStats s3 = connected_set_stats(star_graph(3));
  CHECK(rooted_average(s3, 0) == Ratio(5, 2));
  CHECK(rooted_average(s3, 1) == Ratio(13, 5));
  CHECK_THROWS_AS(rooted_average(s3, 4), GraphError);
  CHECK_THROWS_AS(rooted_average(s3, -1), GraphError);

  for (int n = 1; n <= 20; ++n) {
    const Ratio d = density(connected_set_stats(path_graph(n)));
    CHECK(d == Ratio(n + 2, 3 * n));
    CHECK(d > Ratio(1, 3));
  }
}

TEST_CASE("enumerator matches both oracles on random graphs up to 14 vertices") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 14;
    const double p = 0.1 + 0.08 * (trial % 10);
    const Graph g = trial % 4 == 0 ? testing::random_graph(rng, n, p)
                                   : testing::random_connected_graph(rng, n, p);
    const ConnStats expected = brute_force_stats(g, kernels::scalar_kernels());
    for (auto isa : available_isas()) {
      CAPTURE(kernels::to_string(isa));
      const auto& table = kernels::kernels_for(isa);
      CHECK(connected_set_stats(g, {}, table) == expected);
      CHECK(brute_force_stats(g, table) == expected);
    }
    if (n <= 11) check_matches_naive(expected, testing::naive_stats(g));
  }
}

TEST_CASE("closed forms for paths and complete graphs") {
  for (int n = 1; n <= 40; ++n) {
    const ConnStats st = connected_set_stats(path_graph(n));
    CHECK(st.N == n * (n + 1) / 2);
    CHECK(st.S == n * (n + 1) * (n + 2) / 6);
    CHECK(average_order(st) == Ratio(n + 2, 3));
  }
  for (int n = 1; n <= 16; ++n) {
    const ConnStats st = connected_set_stats(complete_graph(n));
    const BigInt p = BigInt(1) << n;
    CHECK(st.N == p - 1);
    CHECK(st.S == n * (p / 2));
    if (n >= 2) CHECK(st.Q == BigInt(n) * (n + 1) * (p / 4));
  }
}

TEST_CASE("statistics invariants") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 16;
    const Graph g = testing::random_graph(rng, n, 0.1 + 0.09 * (trial % 10));
    const ConnStats st = connected_set_stats(g);
    CHECK(st.N >= n);
    CHECK(st.S >= st.N);
    CHECK(st.Q >= st.S);
    BigInt rooted_n = 0, rooted_s = 0;
    for (int v = 0; v < n; ++v) {
      rooted_n += st.rooted_count[v];
      rooted_s += st.rooted_size_sum[v];
    }
    CHECK(rooted_n == st.S);
    CHECK(rooted_s == st.Q);
    CHECK(st.contains_full_set == is_connected(g));
    // Singletons, spanning-tree edges and V are distinct once n >= 3.
    if (is_connected(g) && n >= 3) CHECK(st.N >= 2 * n);
    CHECK(st.count_proper() == st.N - (st.contains_full_set ? 1 : 0));
  }
}

TEST_CASE("adding an edge never decreases N") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 12;
    Graph g = testing::random_graph(rng, n, 0.2);
    BigInt previous = connected_set_stats(g).N;
    for (int step = 0; step < 6; ++step) {
      const int u = static_cast<int>(rng() % n);
      const int v = static_cast<int>(rng() % n);
      if (u == v) continue;
      g.add_edge(u, v);
      const BigInt now = connected_set_stats(g).N;
      CHECK(now >= previous);
      previous = now;
    }
  }
}

TEST_CASE("anchor-parallel counting is bit-identical") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 5 + trial, 0.25);
    const ConnStats serial = connected_set_stats(g);
    for (int threads : {2, 3, 8, 64}) {
      CHECK(connected_set_stats(g, {kUnlimitedBudget, threads}) == serial);
    }
  }
}

TEST_CASE("budget exhaustion is loud and exact") {
  const Graph p10 = path_graph(10);  // N = 55
  CHECK(connected_set_stats(p10, {55, 1}).N == 55);
  CHECK_THROWS_AS(connected_set_stats(p10, {54, 1}), BudgetExceeded);
  CHECK_THROWS_AS(connected_set_stats(p10, {54, 4}), BudgetExceeded);
  CHECK(connected_set_stats(p10, {55, 4}).N == 55);
  // Past one internal batch.
  const Graph k12 = complete_graph(12);  // N = 4095
  CHECK_THROWS_AS(connected_set_stats(k12, {4094, 1}), BudgetExceeded);
  CHECK(connected_set_stats(k12, {4095, 1}).N == 4095);
  try {
    connected_set_stats(k12, {100, 1});
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget() == 100);
  }
}

TEST_CASE("enumeration handles the 64-vertex cap") {
  const ConnStats p64 = connected_set_stats(path_graph(64));
  CHECK(p64.N == 64 * 65 / 2);
  CHECK(p64.S == 64 * 65 * 66 / 6);
  const ConnStats star = connected_set_stats(star_graph(20));  // 2^20 + 20 sets
  CHECK(star.N == (BigInt(1) << 20) + 20);
}
