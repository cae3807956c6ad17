// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "consets/graph.hpp"
#include "consets/ratio.hpp"
#include "consets/verifier.hpp"

namespace consets::harness {

using Json = nlohmann::ordered_json;

enum class RecordStatus { kOk, kSkippedBudget };

/// One output row: a graph, its statistics and (for verify/scan) verdicts.
struct ScanRecord {
  std::uint64_t index = 0;
  std::string graph6;
  int n = 0;
  int m = 0;
  int kappa = 0;
  RecordStatus status = RecordStatus::kOk;
  BigInt N = 0;
  BigInt S = 0;
  BigInt Q = 0;
  Ratio A;
  Ratio D;
  bool has_verdicts = false;
  std::vector<Verdict> verdicts;

  bool connected() const { return kappa > 0 || n == 1; }

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

ScanRecord make_stats_record(std::uint64_t index, const Graph& g, const ConnStats& st,
                             int kappa);
ScanRecord make_verify_record(std::uint64_t index, const Graph& g, const GraphReport& report);
ScanRecord make_skipped_record(std::uint64_t index, const Graph& g, int kappa,
                               bool with_verdicts);

/// PASS, FAIL, NA or EQ (applicable, passed, with equality).
std::string verdict_cell(const Verdict& v);

std::string csv_header(bool with_verdicts);
std::string to_csv_row(const ScanRecord& record);

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);
Json to_json(const ScanRecord& record);
/// Throws std::invalid_argument on a malformed record.
ScanRecord record_from_json(const Json& j);

}  // namespace consets::harness
