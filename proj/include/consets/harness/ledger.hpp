// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "consets/harness/record.hpp"

namespace consets::harness {

/// Running minima over connected graphs: A per order, D per (order, kappa).
///
/// Ties keep the entry with the smaller input index, so merging partial
/// ledgers in any grouping gives the same result as folding in order.
class ExtremalLedger {
 public:
  struct Entry {
    Ratio value;
    std::string witness;
    std::uint64_t index = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  /// Ignores disconnected graphs and skipped records.
  void fold(const ScanRecord& record);
  void merge(const ExtremalLedger& other);

  bool empty() const { return min_average_.empty() && min_density_.empty(); }
  const std::map<int, Entry>& min_average() const { return min_average_; }
  const std::map<std::pair<int, int>, Entry>& min_density() const { return min_density_; }

  Json to_json() const;
  static ExtremalLedger from_json(const Json& j);

  friend bool operator==(const ExtremalLedger&, const ExtremalLedger&) = default;

 private:
  std::map<int, Entry> min_average_;
  std::map<std::pair<int, int>, Entry> min_density_;
};

}  // namespace consets::harness
