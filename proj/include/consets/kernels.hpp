// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

// Word-parallel inner loops with a portable scalar reference and vectorized
// variants chosen at runtime from the CPU's feature bits. Every variant must
// produce results identical to the scalar one for every input.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace consets::kernels {

/// Machine-word counters fed by tally_sets(); exact while fewer than 2^57
/// sets have been added (callers drain them long before that).
struct SetTally {
  std::uint64_t sets = 0;
  std::array<std::uint64_t, 65> by_size{};
  alignas(32) std::array<std::uint64_t, 64> rooted_count{};
  alignas(32) std::array<std::uint64_t, 64> rooted_size_sum{};

  friend bool operator==(const SetTally&, const SetTally&) = default;
};

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa);
std::optional<Isa> isa_from_string(std::string_view name);

struct KernelTable {
  Isa isa;

  /// For each mask U of a graph of order n: sets += 1, by_size[|U|] += 1 and,
  /// for every v in U, rooted_count[v] += 1 and rooted_size_sum[v] += |U|.
  void (*tally_sets)(std::span<const std::uint64_t> masks, int n, SetTally& tally);

  /// reach[i] = vertices reachable from the lowest vertex of subsets[i] while
  /// staying inside subsets[i]; 0 for an empty subset. `adj` holds n rows.
  void (*closure_batch)(std::span<const std::uint64_t> adj,
                        std::span<const std::uint64_t> subsets,
                        std::span<std::uint64_t> reach);
};

const KernelTable& scalar_kernels();

/// Compiled in and supported by this CPU.
bool isa_available(Isa isa);

/// Throws std::runtime_error when the ISA is not available.
const KernelTable& kernels_for(Isa isa);

/// The override when one is set, otherwise the widest available ISA.
const KernelTable& active_kernels();

/// Pins active_kernels() to `isa` (nullopt restores automatic selection).
/// Not synchronized with running enumerations; call before starting work.
void set_active_isa(std::optional<Isa> isa);

namespace detail {
void tally_sets_scalar(std::span<const std::uint64_t> masks, int n, SetTally& tally);
void closure_batch_scalar(std::span<const std::uint64_t> adj,
                          std::span<const std::uint64_t> subsets,
                          std::span<std::uint64_t> reach);
void tally_sets_avx2(std::span<const std::uint64_t> masks, int n, SetTally& tally);
void closure_batch_avx2(std::span<const std::uint64_t> adj,
                        std::span<const std::uint64_t> subsets,
                        std::span<std::uint64_t> reach);
}  // namespace detail

}  // namespace consets::kernels
