// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

// Built with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <array>
#include <bit>

#include "consets/kernels.hpp"

namespace consets::kernels::detail {
namespace {

// G groups of four vertices. Accumulators live in registers for the whole
// batch and are written back once.
template <int G>
void tally_groups(std::span<const std::uint64_t> masks, SetTally& tally) {
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i zero = _mm256_setzero_si256();
  __m256i count[G];
  __m256i size_sum[G];
  __m256i shift[G];
  for (int g = 0; g < G; ++g) {
    count[g] = _mm256_load_si256(
        reinterpret_cast<const __m256i*>(tally.rooted_count.data() + 4 * g));
    size_sum[g] = _mm256_load_si256(
        reinterpret_cast<const __m256i*>(tally.rooted_size_sum.data() + 4 * g));
    shift[g] = _mm256_setr_epi64x(4 * g, 4 * g + 1, 4 * g + 2, 4 * g + 3);
  }
  for (const std::uint64_t mask : masks) {
    const int k = std::popcount(mask);
    ++tally.by_size[k];
    const __m256i vmask = _mm256_set1_epi64x(static_cast<long long>(mask));
    const __m256i vk = _mm256_set1_epi64x(k);
    for (int g = 0; g < G; ++g) {
      const __m256i bit = _mm256_and_si256(_mm256_srlv_epi64(vmask, shift[g]), one);
      count[g] = _mm256_add_epi64(count[g], bit);
      size_sum[g] = _mm256_add_epi64(
          size_sum[g], _mm256_and_si256(_mm256_sub_epi64(zero, bit), vk));
    }
  }
  for (int g = 0; g < G; ++g) {
    _mm256_store_si256(reinterpret_cast<__m256i*>(tally.rooted_count.data() + 4 * g),
                       count[g]);
    _mm256_store_si256(reinterpret_cast<__m256i*>(tally.rooted_size_sum.data() + 4 * g),
                       size_sum[g]);
  }
  tally.sets += masks.size();
}

using TallyFn = void (*)(std::span<const std::uint64_t>, SetTally&);

template <int... Gs>
constexpr std::array<TallyFn, sizeof...(Gs)> make_tally_table(
    std::integer_sequence<int, Gs...>) {
  return {&tally_groups<Gs + 1>...};
}

constexpr auto kTallyByGroups = make_tally_table(std::make_integer_sequence<int, 16>{});

}  // namespace

void tally_sets_avx2(std::span<const std::uint64_t> masks, int n, SetTally& tally) {
  const int groups = n <= 0 ? 1 : (n + 3) / 4;
  kTallyByGroups[groups - 1](masks, tally);
}

void closure_batch_avx2(std::span<const std::uint64_t> adj,
                        std::span<const std::uint64_t> subsets,
                        std::span<std::uint64_t> reach) {
  const std::size_t full = subsets.size() / 4 * 4;
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t i = 0; i < full; i += 4) {
    const __m256i within =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(subsets.data() + i));
    // Lowest set bit per lane.
    __m256i reached = _mm256_and_si256(within, _mm256_sub_epi64(zero, within));
    __m256i frontier = reached;
    while (!_mm256_testz_si256(frontier, frontier)) {
      alignas(32) std::uint64_t lanes[4];
      _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), frontier);
      const std::uint64_t any = lanes[0] | lanes[1] | lanes[2] | lanes[3];
      __m256i next = zero;
      for (std::uint64_t m = any; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        const __m256i has = _mm256_cmpeq_epi64(
            _mm256_and_si256(frontier, _mm256_set1_epi64x(static_cast<long long>(m & -m))),
            zero);
        next = _mm256_or_si256(
            next, _mm256_andnot_si256(
                      has, _mm256_set1_epi64x(static_cast<long long>(adj[v]))));
      }
      frontier = _mm256_andnot_si256(reached, _mm256_and_si256(next, within));
      reached = _mm256_or_si256(reached, frontier);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(reach.data() + i), reached);
  }
  closure_batch_scalar(adj, subsets.subspan(full), reach.subspan(full));
}

}  // namespace consets::kernels::detail
