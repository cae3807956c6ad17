// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include "consets/stats.hpp"

namespace consets {

void ConnStats::absorb(const kernels::SetTally& tally) {
  for (int k = 1; k <= n; ++k) {
    const std::uint64_t count = tally.by_size[k];
    if (count == 0) continue;
    const BigInt c(count);
    N += c;
    S += c * k;
    Q += c * (k * k);
  }
  if (tally.by_size[n] != 0) contains_full_set = true;
  for (int v = 0; v < n; ++v) {
    rooted_count[v] += tally.rooted_count[v];
    rooted_size_sum[v] += tally.rooted_size_sum[v];
  }
}

ConnStats& ConnStats::operator+=(const ConnStats& other) {
  if (other.n != n) throw GraphError("cannot merge statistics of different orders");
  N += other.N;
  S += other.S;
  Q += other.Q;
  for (int v = 0; v < n; ++v) {
    rooted_count[v] += other.rooted_count[v];
    rooted_size_sum[v] += other.rooted_size_sum[v];
  }
  contains_full_set = contains_full_set || other.contains_full_set;
  return *this;
}

Ratio average_order(const ConnStats& st) { return Ratio(st.S, st.N); }

Ratio density(const ConnStats& st) { return Ratio(st.S, st.N * st.n); }

Ratio rooted_average(const ConnStats& st, int v) {
  if (v < 0 || v >= st.n) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(st.n));
  }
  return Ratio(st.rooted_size_sum[v], st.rooted_count[v]);
}

}  // namespace consets
