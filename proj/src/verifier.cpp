// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include "consets/verifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "consets/graph6.hpp"

namespace consets {
namespace {

constexpr std::array<std::string_view, 8> kCheckNames{
    "thm2_path_bound", "thm3_kconn_density", "thm4_rooted",   "cor1_sumsq",
    "identities",      "thm3_deletion_identity", "conj2_mindeg3", "tree_band",
};

Verdict not_applicable(CheckId id, std::string why) {
  Verdict v;
  v.check = id;
  v.applicable = false;
  v.passed = true;
  v.detail = std::move(why);
  return v;
}

Verdict compare_at_least(CheckId id, Ratio lhs, Ratio rhs) {
  Verdict v;
  v.check = id;
  v.passed = lhs >= rhs;
  v.equality = lhs == rhs;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

std::string margin_text(const Ratio& lhs, const Ratio& rhs) {
  const Ratio margin = lhs - rhs;
  return "margin=" + margin.str() + " (" + margin.decimal() + ")";
}

BigInt sum(const std::vector<BigInt>& values) {
  BigInt total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace

std::string_view to_string(CheckId id) { return kCheckNames[static_cast<int>(id)]; }

std::optional<CheckId> check_id_from_string(std::string_view name) {
  for (CheckId id : kAllChecks) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

bool is_report_only(CheckId id) { return id == CheckId::kConj2MinDeg3; }

bool Verdict::is_violation() const {
  return applicable && !is_report_only(check) && (!passed || soundness_violation);
}

Ratio a_k(int k) {
  if (k < 1 || k > 4096) throw std::domain_error("a_k needs 1 <= k <= 4096");
  BigInt half_power = 1;
  half_power <<= (k - 1);
  return Ratio(half_power, 2 * half_power + 1);
}

bool check_recurrence(int k_max) {
  if (k_max < 2) return false;
  const Ratio half(1, 2);
  Ratio prev = a_k(1);
  if (!(prev < half)) return false;
  for (int k = 2; k <= k_max; ++k) {
    const Ratio current = a_k(k);
    const Ratio two_prev = Ratio(2) * prev;
    if (current != two_prev / (two_prev + Ratio(1))) return false;
    if (!(prev < current && current < half)) return false;
    prev = current;
  }
  return true;
}

Verdict check_thm2(const Graph& g, const ConnStats& st) {
  if (!is_connected(g)) return not_applicable(CheckId::kThm2PathBound, "graph is disconnected");
  const int n = g.order();
  Verdict v = compare_at_least(CheckId::kThm2PathBound, average_order(st), Ratio(n + 2, 3));
  const bool path = is_path_graph(g);
  v.soundness_violation = v.equality != path;
  v.detail = "A=" + v.lhs.str() + " bound=(n+2)/3=" + v.rhs.str() +
             " is_path=" + (path ? "true" : "false");
  if (v.soundness_violation) {
    v.detail += path ? " SOUNDNESS: path without equality"
                     : " SOUNDNESS: equality on a non-path";
  }
  return v;
}

Verdict check_thm3(const Graph& g, const ConnStats& st, std::optional<int> kappa) {
  if (!is_connected(g)) {
    return not_applicable(CheckId::kThm3KconnDensity, "graph is disconnected");
  }
  const int k = kappa ? *kappa : vertex_connectivity(g);
  if (k < 1) return not_applicable(CheckId::kThm3KconnDensity, "kappa=0");
  Verdict v = compare_at_least(CheckId::kThm3KconnDensity, density(st), a_k(k));
  v.detail = "k=" + std::to_string(k) + " D=" + v.lhs.str() + " a_k=" + v.rhs.str() + " " +
             margin_text(v.lhs, v.rhs);
  return v;
}

Verdict check_thm4(const Graph& g, const ConnStats& st) {
  if (!is_connected(g)) return not_applicable(CheckId::kThm4Rooted, "graph is disconnected");
  int argmin = 0;
  Ratio best = rooted_average(st, 0);
  for (int v = 1; v < g.order(); ++v) {
    Ratio candidate = rooted_average(st, v);
    if (candidate < best) {
      best = std::move(candidate);
      argmin = v;
    }
  }
  Verdict v = compare_at_least(CheckId::kThm4Rooted, best, Ratio(g.order() + 1, 2));
  v.detail = "min at vertex " + std::to_string(argmin) + " A(G,v)=" + v.lhs.str() + " " +
             margin_text(v.lhs, v.rhs);
  return v;
}

Verdict check_cor1(const Graph& g, const ConnStats& st) {
  if (!is_connected(g)) return not_applicable(CheckId::kCor1SumSq, "graph is disconnected");
  // 2Q >= (n+1) S, compared as Q >= (n+1) S / 2.
  Verdict v = compare_at_least(CheckId::kCor1SumSq, Ratio(st.Q),
                               Ratio(BigInt(g.order() + 1) * st.S, BigInt(2)));
  v.detail = "Q=" + st.Q.str() + " (n+1)S/2=" + v.rhs.str();
  return v;
}

Verdict check_identities(const Graph& /*g*/, const ConnStats& st) {
  const BigInt rooted_n = sum(st.rooted_count);
  const BigInt rooted_s = sum(st.rooted_size_sum);
  Verdict v;
  v.check = CheckId::kIdentities;
  v.lhs = Ratio(rooted_n);
  v.rhs = Ratio(st.S);
  v.passed = rooted_n == st.S && rooted_s == st.Q;
  v.equality = v.passed;
  v.detail = "sum N(G,i)=" + rooted_n.str() + " S=" + st.S.str() +
             "; sum S(G,i)=" + rooted_s.str() + " Q=" + st.Q.str();
  return v;
}

Verdict check_deletion_identity(const Graph& g, const ConnStats& st,
                                const EnumerationOptions& options) {
  if (g.order() < 2) return not_applicable(CheckId::kThm3DeletionIdentity, "n=1");
  if (!is_connected(g)) {
    return not_applicable(CheckId::kThm3DeletionIdentity, "graph is disconnected");
  }
  const int n = g.order();
  BigInt deleted_s = 0;
  BigInt deleted_n = 0;
  for (int i = 0; i < n; ++i) {
    const ConnStats sub = connected_set_stats(delete_vertex(g, i), options);
    deleted_s += sub.S;
    deleted_n += sub.N;
  }
  // Over C' = C \ {V}: sum |U|(n - |U|) = n S' - Q' and sum (n - |U|) = n N' - S'.
  const BigInt left_s = BigInt(n) * st.size_sum_proper() - st.square_sum_proper();
  const BigInt left_n = BigInt(n) * st.count_proper() - st.size_sum_proper();

  Verdict v;
  v.check = CheckId::kThm3DeletionIdentity;
  v.lhs = Ratio(left_s);
  v.rhs = Ratio(deleted_s);
  v.passed = left_s == deleted_s && left_n == deleted_n;
  v.equality = v.passed;
  v.detail = "nS'-Q'=" + left_s.str() + " sum S(G_i)=" + deleted_s.str() +
             "; nN'-S'=" + left_n.str() + " sum N(G_i)=" + deleted_n.str();
  return v;
}

Verdict check_deletion_identity(const Graph& g, const EnumerationOptions& options) {
  return check_deletion_identity(g, connected_set_stats(g, options), options);
}

Verdict check_conj2(const Graph& g, const ConnStats& st) {
  if (!is_connected(g)) return not_applicable(CheckId::kConj2MinDeg3, "graph is disconnected");
  const int delta = min_degree(g);
  if (delta < 3) {
    return not_applicable(CheckId::kConj2MinDeg3, "min degree " + std::to_string(delta));
  }
  Verdict v = compare_at_least(CheckId::kConj2MinDeg3, density(st), Ratio(1, 2));
  v.detail = "min_degree=" + std::to_string(delta) + " D=" + v.lhs.str() + " " +
             margin_text(v.lhs, v.rhs);
  if (!v.passed) {
    v.counterexample_candidate = true;
    v.detail += " COUNTEREXAMPLE CANDIDATE graph6=" + to_graph6(g);
  }
  return v;
}

Verdict check_tree_band(const Graph& g, const ConnStats& st) {
  if (!is_tree(g)) return not_applicable(CheckId::kTreeBand, "not a tree");
  if (g.order() < 3) return not_applicable(CheckId::kTreeBand, "no internal vertex");
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) {
      return not_applicable(CheckId::kTreeBand,
                            "internal vertex " + std::to_string(v) + " has degree 2");
    }
  }
  const Ratio upper(3, 4);
  Verdict v = compare_at_least(CheckId::kTreeBand, density(st), Ratio(1, 2));
  v.passed = v.passed && v.lhs < upper;
  v.detail = "D=" + v.lhs.str() + " band=[1/2, 3/4)";
  return v;
}

bool GraphReport::passed() const {
  return std::none_of(verdicts.begin(), verdicts.end(),
                      [](const Verdict& v) { return v.is_violation(); });
}

bool GraphReport::has_counterexample() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.counterexample_candidate; });
}

const Verdict& GraphReport::verdict(CheckId id) const {
  for (const auto& v : verdicts) {
    if (v.check == id) return v;
  }
  throw std::out_of_range("no verdict for " + std::string(to_string(id)));
}

GraphReport verify_graph(const Graph& g, const EnumerationOptions& options) {
  GraphReport report;
  report.stats = connected_set_stats(g, options);
  report.kappa = vertex_connectivity(g);
  const ConnStats& st = report.stats;
  report.verdicts = {
      check_thm2(g, st),
      check_thm3(g, st, report.kappa),
      check_thm4(g, st),
      check_cor1(g, st),
      check_identities(g, st),
      check_deletion_identity(g, st, options),
      check_conj2(g, st),
      check_tree_band(g, st),
  };
  return report;
}

std::vector<Verdict> verify_all(const Graph& g, const EnumerationOptions& options) {
  return verify_graph(g, options).verdicts;
}

}  // namespace consets
