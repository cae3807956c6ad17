// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include "consets/harness/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <memory>
#include <optional>

#include "CLI11.hpp"

#include "consets/generators.hpp"
#include "consets/graph6.hpp"
#include "consets/harness/ledger.hpp"
#include "consets/harness/pipeline.hpp"
#include "consets/harness/record.hpp"
#include "consets/kernels.hpp"
#include "consets/verifier.hpp"

namespace consets::harness {
namespace {

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;
constexpr std::size_t kChunk = 4096;

enum class Mode { kStats, kVerify, kScan, kExtremal };

struct StreamOptions {
  std::string input = "-";
  std::vector<std::string> gen;
  std::string format = "csv";
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
  int anchor_threads = 1;
  std::string isa = "auto";
  std::string ledger_path;
};

struct ExhaustiveOptions {
  int n = 0;
  bool connected_only = false;
  std::string format = "json";
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
  std::string isa = "auto";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pins the kernel ISA for the duration of one command.
class IsaScope {
 public:
  explicit IsaScope(const std::string& name) {
    if (name == "auto") return;
    const auto isa = kernels::isa_from_string(name);
    if (!isa) throw UsageError("unknown --isa '" + name + "'");
    if (!kernels::isa_available(*isa)) throw UsageError("--isa " + name + " is not available");
    kernels::set_active_isa(*isa);
    pinned_ = true;
  }
  ~IsaScope() {
    if (pinned_) kernels::set_active_isa(std::nullopt);
  }
  IsaScope(const IsaScope&) = delete;
  IsaScope& operator=(const IsaScope&) = delete;

 private:
  bool pinned_ = false;
};

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(std::string(what) + ": '" + text + "' is not an integer");
  }
  return value;
}

Graph graph_from_args(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("generator needs a kind");
  const auto kind = generator_kind_from_string(args.front());
  if (!kind) throw UsageError("unknown generator '" + args.front() + "'");
  std::vector<int> params;
  for (std::size_t i = 1; i < args.size(); ++i) {
    params.push_back(parse_int(args[i], "generator parameter"));
  }
  try {
    return make_generator(*kind, params);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
}

void require_format(const std::string& format) {
  if (format != "csv" && format != "json") {
    throw UsageError("--format must be csv or json, got '" + format + "'");
  }
}

ScanRecord process_graph(Mode mode, std::uint64_t index, const Graph& g,
                         const EnumerationOptions& enumeration) {
  const bool with_verdicts = mode == Mode::kVerify || mode == Mode::kScan;
  try {
    if (with_verdicts) return make_verify_record(index, g, verify_graph(g, enumeration));
    return make_stats_record(index, g, connected_set_stats(g, enumeration),
                             vertex_connectivity(g));
  } catch (const BudgetExceeded&) {
    return make_skipped_record(index, g, vertex_connectivity(g), with_verdicts);
  }
}

bool has_violation(const ScanRecord& r) {
  return std::any_of(r.verdicts.begin(), r.verdicts.end(),
                     [](const Verdict& v) { return v.is_violation(); });
}

int run_stream(Mode mode, const StreamOptions& opts, std::istream& in, std::ostream& out,
               std::ostream& err) {
  require_format(opts.format);
  if (opts.jobs < 1) throw UsageError("--jobs must be >= 1");
  if (opts.anchor_threads < 1) throw UsageError("--anchor-threads must be >= 1");
  IsaScope isa(opts.isa);
  const EnumerationOptions enumeration{opts.budget, opts.anchor_threads};
  const bool with_verdicts = mode == Mode::kVerify || mode == Mode::kScan;
  const bool emit_records = mode != Mode::kExtremal;
  const bool csv = opts.format == "csv";

  std::unique_ptr<std::ifstream> file;
  std::istream* source = &in;
  if (opts.gen.empty() && opts.input != "-") {
    file = std::make_unique<std::ifstream>(opts.input);
    if (!*file) throw UsageError("cannot open input '" + opts.input + "'");
    source = file.get();
  }
  std::optional<Graph> generated;
  if (!opts.gen.empty()) generated = graph_from_args(opts.gen);

  if (emit_records && csv) out << csv_header(with_verdicts) << '\n';

  Graph6Reader reader(*source);
  ExtremalLedger ledger;
  bool violation = false;
  std::uint64_t index = 0;
  std::optional<InputError> input_error;
  bool finished = false;
  while (!finished) {
    std::vector<InputGraph> chunk;
    if (generated) {
      chunk.push_back({0, *generated});
      finished = true;
    } else {
      input_error = reader.read_chunk(chunk, kChunk);
      finished = reader.done();
    }

    std::vector<ScanRecord> records(chunk.size());
    parallel_for(chunk.size(), opts.jobs, [&](std::size_t i) {
      records[i] = process_graph(mode, index + i, chunk[i].graph, enumeration);
    });
    for (const auto& record : records) {
      if (emit_records) {
        out << (csv ? to_csv_row(record) : to_json(record).dump()) << '\n';
      }
      ledger.fold(record);
      violation = violation || has_violation(record);
      if (has_violation(record)) {
        err << "violation: record " << record.index << " (" << record.graph6 << ")\n";
      }
    }
    index += chunk.size();
    if (input_error) {
      err << "error: line " << input_error->line << ": " << input_error->message << '\n';
      return kExitInputError;
    }
  }

  if (mode == Mode::kExtremal) out << ledger.to_json().dump(2) << '\n';
  if (mode == Mode::kScan) {
    const std::string text = ledger.to_json().dump(2);
    if (opts.ledger_path.empty()) {
      err << text << '\n';
    } else {
      std::ofstream ledger_out(opts.ledger_path);
      if (!ledger_out) throw UsageError("cannot write ledger '" + opts.ledger_path + "'");
      ledger_out << text << '\n';
    }
  }
  return violation ? kExitViolation : kExitOk;
}

// Edge-mask bit i is the i-th pair in graph6 order (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

struct SweepTally {
  std::uint64_t scanned = 0;
  std::uint64_t connected = 0;
  std::uint64_t skipped = 0;
  std::uint64_t paths = 0;
  std::uint64_t thm2_equalities = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t counterexamples = 0;
  std::array<std::uint64_t, kAllChecks.size()> violations{};
  std::optional<Ratio> min_average;
  std::uint64_t min_average_count = 0;
  bool min_average_all_paths = true;
  ExtremalLedger ledger;

  void merge(const SweepTally& o) {
    scanned += o.scanned;
    connected += o.connected;
    skipped += o.skipped;
    paths += o.paths;
    thm2_equalities += o.thm2_equalities;
    mismatches += o.mismatches;
    counterexamples += o.counterexamples;
    for (std::size_t i = 0; i < violations.size(); ++i) violations[i] += o.violations[i];
    if (o.min_average) {
      if (!min_average || *o.min_average < *min_average) {
        min_average = o.min_average;
        min_average_count = o.min_average_count;
        min_average_all_paths = o.min_average_all_paths;
      } else if (*o.min_average == *min_average) {
        min_average_count += o.min_average_count;
        min_average_all_paths = min_average_all_paths && o.min_average_all_paths;
      }
    }
    ledger.merge(o.ledger);
  }
};

int run_exhaustive(const ExhaustiveOptions& opts, std::ostream& out, std::ostream& err) {
  require_format(opts.format);
  if (opts.n < 1 || opts.n > 6) throw UsageError("exhaustive sweeps need 1 <= n <= 6");
  if (opts.jobs < 1) throw UsageError("--jobs must be >= 1");
  IsaScope isa(opts.isa);
  const int n = opts.n;
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  const EnumerationOptions enumeration{opts.budget, 1};

  constexpr std::uint64_t kBlock = 1024;
  const std::size_t blocks = static_cast<std::size_t>((total + kBlock - 1) / kBlock);
  std::vector<SweepTally> parts(blocks);
  parallel_for(blocks, opts.jobs, [&](std::size_t b) {
    SweepTally& t = parts[b];
    const std::uint64_t end = std::min(total, (b + 1) * kBlock);
    for (std::uint64_t mask = b * kBlock; mask < end; ++mask) {
      const Graph g = graph_from_edge_mask(n, mask);
      const bool connected = is_connected(g);
      if (opts.connected_only && !connected) continue;
      ++t.scanned;
      if (connected) ++t.connected;
      const bool path = is_path_graph(g);
      if (path) ++t.paths;
      ScanRecord record;
      try {
        record = make_verify_record(mask, g, verify_graph(g, enumeration));
      } catch (const BudgetExceeded&) {
        ++t.skipped;
        continue;
      }
      for (const auto& v : record.verdicts) {
        if (v.is_violation()) ++t.violations[static_cast<std::size_t>(v.check)];
        if (v.counterexample_candidate) ++t.counterexamples;
        if (v.check == CheckId::kThm2PathBound && v.applicable) {
          if (v.equality) ++t.thm2_equalities;
          if (v.equality != path) ++t.mismatches;
        }
      }
      if (connected) {
        if (!t.min_average || record.A < *t.min_average) {
          t.min_average = record.A;
          t.min_average_count = 1;
          t.min_average_all_paths = path;
        } else if (record.A == *t.min_average) {
          ++t.min_average_count;
          t.min_average_all_paths = t.min_average_all_paths && path;
        }
      }
      t.ledger.fold(record);
    }
  });
  SweepTally sweep;
  for (const auto& part : parts) sweep.merge(part);

  std::uint64_t violation_total = 0;
  for (auto v : sweep.violations) violation_total += v;

  Json summary;
  summary["n"] = n;
  summary["connected_only"] = opts.connected_only;
  summary["labeled_graphs"] = total;
  summary["scanned"] = sweep.scanned;
  summary["connected"] = sweep.connected;
  summary["skipped_budget"] = sweep.skipped;
  Json per_check;
  for (CheckId id : kAllChecks) {
    if (is_report_only(id)) continue;
    per_check[std::string(to_string(id))] = sweep.violations[static_cast<std::size_t>(id)];
  }
  summary["violations"] = per_check;
  summary["total_violations"] = violation_total;
  summary["path_graphs"] = sweep.paths;
  summary["thm2_equalities"] = sweep.thm2_equalities;
  summary["equality_path_mismatches"] = sweep.mismatches;
  summary["counterexample_candidates"] = sweep.counterexamples;
  if (sweep.min_average) {
    const auto& first = sweep.ledger.min_average().at(n);
    summary["min_average"] = {{"value", sweep.min_average->str()},
                              {"decimal", sweep.min_average->decimal()},
                              {"witnesses", sweep.min_average_count},
                              {"all_witnesses_paths", sweep.min_average_all_paths},
                              {"first_witness", first.witness}};
  }
  summary["ledger"] = sweep.ledger.to_json();

  if (opts.format == "json") {
    out << summary.dump(2) << '\n';
  } else {
    out << "key,value\n";
    for (const auto& [key, value] : summary.items()) {
      if (value.is_object() || value.is_array()) continue;
      out << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump())
          << '\n';
    }
    for (const auto& [key, value] : per_check.items()) {
      out << "violations." << key << ',' << value.dump() << '\n';
    }
    if (sweep.min_average) {
      out << "min_average," << sweep.min_average->str() << '\n';
      out << "min_average_witnesses," << sweep.min_average_count << '\n';
    }
  }
  const bool failed = violation_total != 0 || sweep.mismatches != 0;
  if (failed) err << "exhaustive sweep found violations\n";
  return failed ? kExitViolation : kExitOk;
}

int run_gen(const std::vector<std::string>& args, std::ostream& out) {
  out << to_graph6(graph_from_args(args)) << '\n';
  return kExitOk;
}

void add_stream_options(CLI::App* sub, StreamOptions& opts, bool with_format) {
  sub->add_option("--input", opts.input, "graph6 file, one graph per line ('-' = stdin)");
  sub->add_option("--gen", opts.gen, "generated graph instead of input, e.g. --gen path 5")
      ->expected(1, 3);
  if (with_format) sub->add_option("--format", opts.format, "csv or json");
  sub->add_option("--budget", opts.budget, "maximum connected sets per graph");
  sub->add_option("--jobs", opts.jobs, "graphs processed concurrently");
  sub->add_option("--anchor-threads", opts.anchor_threads,
                  "threads per graph for anchor-parallel counting");
  sub->add_option("--isa", opts.isa, "kernel ISA: auto, scalar or avx2");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Connected induced vertex sets: exact statistics and bound checks", "consets"};
  app.require_subcommand(1);

  StreamOptions stats_opts;
  StreamOptions verify_opts;
  StreamOptions scan_opts;
  StreamOptions extremal_opts;
  ExhaustiveOptions exhaustive_opts;
  std::vector<std::string> gen_args;

  auto* stats = app.add_subcommand("stats", "exact N, S, Q, A, D per graph");
  add_stream_options(stats, stats_opts, true);
  auto* verify = app.add_subcommand("verify", "run every bound and identity check per graph");
  add_stream_options(verify, verify_opts, true);
  auto* scan = app.add_subcommand("scan", "verify plus extremal ledger");
  add_stream_options(scan, scan_opts, true);
  scan->add_option("--ledger", scan_opts.ledger_path, "write the ledger JSON here (default stderr)");
  auto* extremal = app.add_subcommand("extremal", "minimum A and D with witnesses (JSON)");
  add_stream_options(extremal, extremal_opts, false);
  auto* exhaustive = app.add_subcommand("exhaustive", "verify every labeled graph on n vertices");
  exhaustive->add_option("n", exhaustive_opts.n, "order, 1..6")->required();
  exhaustive->add_flag("--connected-only", exhaustive_opts.connected_only,
                       "skip disconnected labeled graphs");
  exhaustive->add_option("--format", exhaustive_opts.format, "csv or json");
  exhaustive->add_option("--budget", exhaustive_opts.budget, "maximum connected sets per graph");
  exhaustive->add_option("--jobs", exhaustive_opts.jobs, "worker threads");
  exhaustive->add_option("--isa", exhaustive_opts.isa, "kernel ISA: auto, scalar or avx2");
  auto* gen = app.add_subcommand("gen", "print a generated graph as graph6");
  gen->add_option("args", gen_args, "KIND PARAMS...")->required()->expected(1, 3);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (stats->parsed()) return run_stream(Mode::kStats, stats_opts, in, out, err);
    if (verify->parsed()) return run_stream(Mode::kVerify, verify_opts, in, out, err);
    if (scan->parsed()) return run_stream(Mode::kScan, scan_opts, in, out, err);
    if (extremal->parsed()) return run_stream(Mode::kExtremal, extremal_opts, in, out, err);
    if (exhaustive->parsed()) return run_exhaustive(exhaustive_opts, out, err);
    if (gen->parsed()) return run_gen(gen_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace consets::harness
