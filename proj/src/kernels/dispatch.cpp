// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <stdexcept>
#include <string>

#include "consets/kernels.hpp"

namespace consets::kernels {
namespace {

constexpr KernelTable kScalar{Isa::kScalar, &detail::tally_sets_scalar,
                              &detail::closure_batch_scalar};
#if defined(CONSETS_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::kAvx2, &detail::tally_sets_avx2,
                            &detail::closure_batch_avx2};
#endif

std::atomic<const KernelTable*> g_override{nullptr};

bool cpu_has_avx2() {
#if defined(CONSETS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt") &&
         __builtin_cpu_supports("bmi");
#else
  return false;
#endif
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

std::optional<Isa> isa_from_string(std::string_view name) {
  if (name == "scalar") return Isa::kScalar;
  if (name == "avx2") return Isa::kAvx2;
  return std::nullopt;
}

const KernelTable& scalar_kernels() { return kScalar; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2: {
      static const bool has = cpu_has_avx2();
      return has;
    }
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::runtime_error("kernel ISA '" + std::string(to_string(isa)) +
                             "' is not available on this build or CPU");
  }
#if defined(CONSETS_HAVE_AVX2)
  if (isa == Isa::kAvx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active_kernels() {
  if (const KernelTable* pinned = g_override.load(std::memory_order_acquire)) {
    return *pinned;
  }
  static const KernelTable& best =
      isa_available(Isa::kAvx2) ? kernels_for(Isa::kAvx2) : kScalar;
  return best;
}

void set_active_isa(std::optional<Isa> isa) {
  g_override.store(isa ? &kernels_for(*isa) : nullptr, std::memory_order_release);
}

}  // namespace consets::kernels
