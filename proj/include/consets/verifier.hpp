// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "consets/graph.hpp"
#include "consets/ratio.hpp"
#include "consets/stats.hpp"

namespace consets {

enum class CheckId {
  kThm2PathBound,
  kThm3KconnDensity,
  kThm4Rooted,
  kCor1SumSq,
  kIdentities,
  kThm3DeletionIdentity,
  kConj2MinDeg3,
  kTreeBand,
};

inline constexpr std::array<CheckId, 8> kAllChecks{
    CheckId::kThm2PathBound,  CheckId::kThm3KconnDensity,     CheckId::kThm4Rooted,
    CheckId::kCor1SumSq,      CheckId::kIdentities,           CheckId::kThm3DeletionIdentity,
    CheckId::kConj2MinDeg3,   CheckId::kTreeBand,
};

std::string_view to_string(CheckId id);
std::optional<CheckId> check_id_from_string(std::string_view name);

/// Conjecture checks never fail a run; everything else is a proved statement.
bool is_report_only(CheckId id);

/// Outcome of one check on one graph.
///
/// When applicable, `passed` says whether lhs and rhs stand in the check's
/// stated relation (lhs >= rhs unless the check says otherwise) and
/// `equality` whether lhs == rhs. Not-applicable verdicts are passed.
struct Verdict {
  CheckId check = CheckId::kIdentities;
  Ratio lhs;
  Ratio rhs;
  bool passed = true;
  bool equality = false;
  bool applicable = true;
  /// A conjecture check failed: the graph is a candidate counterexample.
  bool counterexample_candidate = false;
  /// Path-bound equality disagreed with the path test.
  bool soundness_violation = false;
  std::string detail;

  /// Fails the run: applicable, not report-only, and failed or unsound.
  bool is_violation() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// a_k = (1 - 1/(2^k + 1)) / 2 = 2^(k-1) / (2^k + 1). Throws for k < 1 or k > 4096.
Ratio a_k(int k);

/// a_k == 2 a_{k-1} / (2 a_{k-1} + 1) for 2 <= k <= k_max, with a_{k-1} < a_k < 1/2.
bool check_recurrence(int k_max);

Verdict check_thm2(const Graph& g, const ConnStats& st);
/// `kappa` defaults to vertex_connectivity(g).
Verdict check_thm3(const Graph& g, const ConnStats& st, std::optional<int> kappa = {});
Verdict check_thm4(const Graph& g, const ConnStats& st);
Verdict check_cor1(const Graph& g, const ConnStats& st);
Verdict check_identities(const Graph& g, const ConnStats& st);
/// Enumerates the n vertex-deleted subgraphs under `options`' budget.
Verdict check_deletion_identity(const Graph& g, const ConnStats& st,
                                const EnumerationOptions& options = {});
Verdict check_deletion_identity(const Graph& g, const EnumerationOptions& options = {});
Verdict check_conj2(const Graph& g, const ConnStats& st);
Verdict check_tree_band(const Graph& g, const ConnStats& st);

struct GraphReport {
  ConnStats stats;
  int kappa = 0;
  std::vector<Verdict> verdicts;  // in kAllChecks order

  bool passed() const;
  bool has_counterexample() const;
  const Verdict& verdict(CheckId id) const;
};

/// Runs every check on one shared ConnStats computation. Propagates
/// BudgetExceeded.
GraphReport verify_graph(const Graph& g, const EnumerationOptions& options = {});

std::vector<Verdict> verify_all(const Graph& g, const EnumerationOptions& options = {});

}  // namespace consets
