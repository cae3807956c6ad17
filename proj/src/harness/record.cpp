// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include "consets/harness/record.hpp"

#include <sstream>
#include <stdexcept>

#include "consets/graph6.hpp"

namespace consets::harness {
namespace {

// CSV verdict columns, in order, and the checks folded into each.
struct Column {
  const char* name;
  std::vector<CheckId> checks;
};

const std::vector<Column>& verdict_columns() {
  static const std::vector<Column> columns{
      {"thm2", {CheckId::kThm2PathBound}},
      {"thm2_eq", {CheckId::kThm2PathBound}},
      {"thm3", {CheckId::kThm3KconnDensity}},
      {"thm4", {CheckId::kThm4Rooted}},
      {"cor1", {CheckId::kCor1SumSq}},
      {"identities", {CheckId::kIdentities, CheckId::kThm3DeletionIdentity}},
      {"conj2", {CheckId::kConj2MinDeg3}},
      {"tree_band", {CheckId::kTreeBand}},
  };
  return columns;
}

const Verdict* find(const ScanRecord& r, CheckId id) {
  for (const auto& v : r.verdicts) {
    if (v.check == id) return &v;
  }
  return nullptr;
}

std::string status_text(RecordStatus s) {
  return s == RecordStatus::kOk ? "ok" : "skipped: budget";
}

ScanRecord base_record(std::uint64_t index, const Graph& g, int kappa) {
  ScanRecord r;
  r.index = index;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.m = g.edge_count();
  r.kappa = kappa;
  return r;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("record is missing '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

ScanRecord make_stats_record(std::uint64_t index, const Graph& g, const ConnStats& st,
                             int kappa) {
  ScanRecord r = base_record(index, g, kappa);
  r.N = st.N;
  r.S = st.S;
  r.Q = st.Q;
  r.A = average_order(st);
  r.D = density(st);
  return r;
}

ScanRecord make_verify_record(std::uint64_t index, const Graph& g, const GraphReport& report) {
  ScanRecord r = make_stats_record(index, g, report.stats, report.kappa);
  r.has_verdicts = true;
  r.verdicts = report.verdicts;
  return r;
}

ScanRecord make_skipped_record(std::uint64_t index, const Graph& g, int kappa,
                               bool with_verdicts) {
  ScanRecord r = base_record(index, g, kappa);
  r.status = RecordStatus::kSkippedBudget;
  r.has_verdicts = with_verdicts;
  return r;
}

std::string verdict_cell(const Verdict& v) {
  if (!v.applicable) return "NA";
  if (!v.passed || v.soundness_violation) return "FAIL";
  return v.equality ? "EQ" : "PASS";
}

std::string csv_header(bool with_verdicts) {
  std::string h = "index,graph6,n,m,kappa,N,S,Q,A_exact,A_dec,D_exact,D_dec";
  if (with_verdicts) {
    for (const auto& c : verdict_columns()) h += std::string(",") + c.name;
  }
  return h;
}

std::string to_csv_row(const ScanRecord& r) {
  std::ostringstream os;
  os << r.index << ',' << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.kappa;
  const bool ok = r.status == RecordStatus::kOk;
  if (ok) {
    os << ',' << r.N << ',' << r.S << ',' << r.Q << ',' << r.A.str() << ',' << r.A.decimal()
       << ',' << r.D.str() << ',' << r.D.decimal();
  } else {
    os << ",,,,,,,";
  }
  if (!r.has_verdicts) return os.str();

  for (const auto& column : verdict_columns()) {
    os << ',';
    if (!ok) {
      os << "SKIP";
      continue;
    }
    if (std::string_view(column.name) == "thm2_eq") {
      // Equality flag alone: EQ, NE, or NA.
      const Verdict* v = find(r, CheckId::kThm2PathBound);
      os << (v == nullptr || !v->applicable ? "NA" : v->equality ? "EQ" : "NE");
      continue;
    }
    if (column.checks.size() == 1) {
      const Verdict* v = find(r, column.checks.front());
      os << (v == nullptr ? "NA" : verdict_cell(*v));
      continue;
    }
    // Combined identity column: FAIL if any fails, NA if none applies.
    bool any_applicable = false;
    bool any_fail = false;
    for (CheckId id : column.checks) {
      const Verdict* v = find(r, id);
      if (v == nullptr || !v->applicable) continue;
      any_applicable = true;
      any_fail = any_fail || verdict_cell(*v) == "FAIL";
    }
    os << (!any_applicable ? "NA" : any_fail ? "FAIL" : "PASS");
  }
  return os.str();
}

Json to_json(const Verdict& v) {
  Json j;
  j["check"] = std::string(to_string(v.check));
  j["applicable"] = v.applicable;
  j["passed"] = v.passed;
  j["equality"] = v.equality;
  j["counterexample_candidate"] = v.counterexample_candidate;
  j["soundness_violation"] = v.soundness_violation;
  j["lhs"] = v.lhs.str();
  j["rhs"] = v.rhs.str();
  j["detail"] = v.detail;
  return j;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  const auto id = check_id_from_string(field(j, "check").get<std::string>());
  if (!id) throw std::invalid_argument("unknown check id");
  v.check = *id;
  v.applicable = field(j, "applicable").get<bool>();
  v.passed = field(j, "passed").get<bool>();
  v.equality = field(j, "equality").get<bool>();
  v.counterexample_candidate = field(j, "counterexample_candidate").get<bool>();
  v.soundness_violation = field(j, "soundness_violation").get<bool>();
  v.lhs = Ratio::parse(field(j, "lhs").get<std::string>());
  v.rhs = Ratio::parse(field(j, "rhs").get<std::string>());
  v.detail = field(j, "detail").get<std::string>();
  return v;
}

Json to_json(const ScanRecord& r) {
  Json j;
  j["index"] = r.index;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["kappa"] = r.kappa;
  j["status"] = status_text(r.status);
  if (r.status == RecordStatus::kOk) {
    j["N"] = r.N.str();
    j["S"] = r.S.str();
    j["Q"] = r.Q.str();
    j["A"] = {{"exact", r.A.str()}, {"decimal", r.A.decimal()}};
    j["D"] = {{"exact", r.D.str()}, {"decimal", r.D.decimal()}};
  }
  if (r.has_verdicts) {
    Json list = Json::array();
    for (const auto& v : r.verdicts) list.push_back(to_json(v));
    j["verdicts"] = std::move(list);
  }
  return j;
}

ScanRecord record_from_json(const Json& j) {
  try {
    ScanRecord r;
    r.index = field(j, "index").get<std::uint64_t>();
    r.graph6 = field(j, "graph6").get<std::string>();
    r.n = field(j, "n").get<int>();
    r.m = field(j, "m").get<int>();
    r.kappa = field(j, "kappa").get<int>();
    const auto status = field(j, "status").get<std::string>();
    if (status == "ok") {
      r.status = RecordStatus::kOk;
    } else if (status == "skipped: budget") {
      r.status = RecordStatus::kSkippedBudget;
    } else {
      throw std::invalid_argument("unknown status '" + status + "'");
    }
    if (r.status == RecordStatus::kOk) {
      r.N = BigInt(field(j, "N").get<std::string>());
      r.S = BigInt(field(j, "S").get<std::string>());
      r.Q = BigInt(field(j, "Q").get<std::string>());
      r.A = Ratio::parse(field(field(j, "A"), "exact").get<std::string>());
      r.D = Ratio::parse(field(field(j, "D"), "exact").get<std::string>());
    }
    if (j.contains("verdicts")) {
      r.has_verdicts = true;
      for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from_json(v));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

}  // namespace consets::harness
