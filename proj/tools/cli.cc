// Copyright 2026 The NAGTI Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nagti/decode_inhibitors.h"
#include "nagti/disjunct.h"
#include "nagti/encoder.h"
#include "nagti/errors.h"
#include "nagti/io.h"
#include "nagti/oracle.h"
#include "nagti/simulation.h"

namespace nagti {
namespace {

// Options shared by the scheme-shaped subcommands.
struct SchemeOptions {
  uint64_t n = 1024;
  uint64_t d = 2;
  int64_t h = -1;  // -1: ceil(0.2 d)
  unsigned z = 1;

  uint64_t H() const { return h < 0 ? DefaultInhibitors(d) : static_cast<uint64_t>(h); }
};

void AddSchemeOptions(CLI::App* cmd, SchemeOptions& o) {
  cmd->add_option("--n", o.n, "Number of items (power of two)")->capture_default_str();
  cmd->add_option("--d", o.d, "Maximum number of defectives")->capture_default_str();
  cmd->add_option("--h", o.h, "Maximum number of inhibitors (default ceil(0.2 d))");
  cmd->add_option("--z", o.z, "Row multiplicity; tolerates (z - 1) / 2 errors")
      ->capture_default_str();
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

nlohmann::ordered_json CountersJson(const OpCounters& c) {
  nlohmann::ordered_json j;
  j["column_generations"] = c.column_generations;
  j["blocks_examined"] = c.blocks_examined;
  j["inversions"] = c.inversions;
  j["candidates_checked"] = c.candidates_checked;
  return j;
}

std::string SweepCsv(const SweepReport& r) {
  std::ostringstream out;
  out << "schema_version,n,d,h,z,e,flip_mode,sampled,seed,instances,scheme,rule,cases,"
         "exact,exact_rate,decode_errors,false_pos_defectives,false_neg_defectives,"
         "false_pos_inhibitors,false_neg_inhibitors,removed_true_defectives,"
         "removed_true_inhibitors,oracle_violations,uniqueness_violations,"
         "skip_mismatches\n";
  auto row = [&](const char* scheme, const char* rule, const RuleTally& t) {
    if (t.cases == 0) return;
    out << kCsvSchemaVersion << ',' << r.options.n << ',' << r.options.d << ','
        << r.options.h << ',' << r.options.z << ',' << r.e << ','
        << FlipModeName(r.options.flip_mode) << ',' << (r.sampled ? "true" : "false")
        << ',' << r.options.seed << ',' << r.instances << ',' << scheme << ',' << rule
        << ',' << t.cases << ',' << t.exact << ',' << t.ExactRate() << ','
        << t.decode_errors << ',' << t.false_pos_defectives << ','
        << t.false_neg_defectives << ',' << t.false_pos_inhibitors << ','
        << t.false_neg_inhibitors << ',' << t.removed_true_defectives << ','
        << t.removed_true_inhibitors << ',' << t.oracle_violations << ','
        << r.uniqueness_violations << ',' << r.skip_mismatches << '\n';
  };
  row("defective_only", "threshold", r.defective_threshold);
  row("defective_only", "paper_literal", r.defective_literal);
  row("full", "threshold", r.full_threshold);
  row("full", "paper_literal", r.full_literal);
  return out.str();
}

int Run(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Non-adaptive group testing with inhibitors: codec and experiments"};
  // --h names the inhibitor bound, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", "nagti 0.1.0");

  SchemeOptions scheme_options;
  std::string out_path;
  std::string rule_name = "threshold";
  std::string strategy_name = "uniform";
  uint64_t seed = 1;

  // params
  CLI::App* params = app.add_subcommand("params", "Print derived parameters and test counts");
  AddSchemeOptions(params, scheme_options);
  params->add_option("--out", out_path, "Write to FILE instead of stdout");

  // gen-column
  CLI::App* gen = app.add_subcommand("gen-column", "Print the support of one matrix column");
  AddSchemeOptions(gen, scheme_options);
  uint64_t item = 1;
  std::string matrix_name = "V";
  gen->add_option("--item", item, "Item index in [1, n]")->required();
  gen->add_option("--matrix", matrix_name, "One of M, G, T, V")
      ->check(CLI::IsMember({"M", "G", "T", "V"}))
      ->capture_default_str();
  gen->add_option("--out", out_path, "Write to FILE instead of stdout");

  // encode
  CLI::App* encode = app.add_subcommand("encode", "Encode an instance file into an outcome file");
  std::string instance_path;
  unsigned errors = 0;
  bool allow_unsafe = false;
  std::string scheme_name;
  encode->add_option("--instance", instance_path, "Instance JSON file")->required();
  encode->add_option("--errors", errors, "Flips to inject (at most e)");
  encode->add_option("--strategy", strategy_name, "uniform or targeted")
      ->check(CLI::IsMember({"uniform", "targeted"}));
  encode->add_option("--seed", seed, "Seed for error placement");
  encode->add_option("--scheme", scheme_name, "defective_only or full (default by h)");
  encode->add_flag("--allow-unsafe", allow_unsafe, "Allow more flips than the scheme tolerates");
  encode->add_option("--out", out_path, "Write to FILE instead of stdout");

  // decode
  CLI::App* decode = app.add_subcommand("decode", "Decode an outcome file");
  std::string outcome_path;
  bool no_skip = false;
  decode->add_option("--outcome", outcome_path, "Outcome file")->required();
  decode->add_option("--rule", rule_name, "literal or threshold")
      ->check(CLI::IsMember({"literal", "paper_literal", "threshold"}));
  decode->add_flag("--no-skip", no_skip, "Invert all-zero blocks too");
  decode->add_option("--out", out_path, "Write to FILE instead of stdout");

  // simulate
  CLI::App* simulate = app.add_subcommand("simulate", "Run a simulation grid from a config file");
  std::string config_path;
  simulate->add_option("--config", config_path, "Simulation JSON config")->required();
  simulate->add_option("--out", out_path, "Write the CSV to FILE instead of stdout");

  // bench
  CLI::App* bench = app.add_subcommand("bench", "Time decoding across n");
  std::vector<uint64_t> bench_ns = {uint64_t{1} << 10, uint64_t{1} << 20, uint64_t{1} << 30};
  unsigned repetitions = 5;
  bench->add_option("--ns", bench_ns, "Comma-separated list of n")->delimiter(',');
  AddSchemeOptions(bench, scheme_options);
  bench->add_option("--reps", repetitions, "Repetitions per n (at least 5)");
  bench->add_option("--seed", seed, "Instance seed");
  bench->add_option("--out", out_path, "Write the CSV to FILE instead of stdout");

  // trend
  CLI::App* trend = app.add_subcommand("trend", "Test counts over a d sweep, h = ceil(0.2 d)");
  std::vector<uint64_t> trend_ds = {2, 4, 8, 16, 32, 64};
  trend->add_option("--n", scheme_options.n, "Number of items");
  trend->add_option("--ds", trend_ds, "Comma-separated list of d")->delimiter(',');
  trend->add_option("--z", scheme_options.z, "Row multiplicity");
  trend->add_option("--out", out_path, "Write the CSV to FILE instead of stdout");

  // verify-disjunct
  CLI::App* verify = app.add_subcommand("verify-disjunct",
                                        "Brute-force check a generated disjunct matrix");
  uint64_t d_eff = 2;
  unsigned r = 1;
  verify->add_option("--n", scheme_options.n, "Number of items")->required();
  verify->add_option("--d", d_eff, "Excluded-set size")->capture_default_str();
  verify->add_option("--r", r, "Included-set size")->capture_default_str();
  verify->add_option("--z", scheme_options.z, "Row multiplicity")->capture_default_str();
  verify->add_option("--out", out_path, "Write to FILE instead of stdout");

  // oracle-sweep
  CLI::App* sweep = app.add_subcommand("oracle-sweep",
                                       "Decode every small instance and compare against brute force");
  std::string flip_mode = "exhaustive";
  uint64_t samples = 100'000;
  bool no_oracle = false;
  bool no_skip_check = false;
  sweep->add_option("--n", scheme_options.n, "Number of items")->capture_default_str();
  sweep->add_option("--d", scheme_options.d, "Maximum number of defectives");
  sweep->add_option("--h", scheme_options.h, "Maximum number of inhibitors");
  sweep->add_option("--z", scheme_options.z, "Row multiplicity");
  sweep->add_option("--flips", flip_mode, "none, exhaustive or sampled")
      ->check(CLI::IsMember({"none", "exhaustive", "sampled"}));
  sweep->add_option("--samples", samples, "Cases per scheme when sampling");
  sweep->add_option("--seed", seed, "Sampling seed");
  sweep->add_flag("--no-oracle", no_oracle, "Skip the brute-force comparison");
  bool skip_check_literal = false;
  sweep->add_flag("--no-skip-check", no_skip_check, "Skip the zero-block equivalence check");
  sweep->add_flag("--skip-check-literal", skip_check_literal,
                  "Also run the zero-block check under the literal rule");
  sweep->add_option("--out", out_path, "Write the CSV to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, out, msg);
    if (code == 0) return kExitOk;
    throw ConfigError(msg.str().empty() ? e.what() : msg.str());
  }
  const SchemeOptions& o = scheme_options;

  if (params->parsed()) {
    Emit(out_path, FormatParams(ComputeParams(o.n, o.d, o.H(), o.z)), out);
  } else if (gen->parsed()) {
    const uint64_t h = o.H();
    const Scheme scheme =
        ComposeScheme(h > 0 ? SchemeKind::kFull : SchemeKind::kDefectiveOnly, o.n, o.d, h, o.z);
    MeasurementSpec spec;
    if (matrix_name == "M") {
      spec = MeasurementSpec::Disjunct(scheme.outer);
    } else if (matrix_name == "T") {
      spec = scheme.kind == SchemeKind::kFull ? scheme.matrix.parts()[0] : scheme.matrix;
    } else if (matrix_name == "G") {
      if (!scheme.pair) throw DomainError("G needs h >= 1");
      spec = MeasurementSpec::Disjunct(scheme.pair);
    } else {
      spec = scheme.matrix;
    }
    nlohmann::ordered_json j;
    j["matrix"] = matrix_name;
    j["item"] = item;
    j["rows"] = spec.rows();
    const std::vector<uint64_t> column = spec.Column(item);
    j["weight"] = column.size();
    j["support"] = column;
    Emit(out_path, j.dump() + "\n", out);
  } else if (encode->parsed()) {
    const InstanceFile instance = ParseInstance(ReadFile(instance_path));
    const SchemeKind kind = scheme_name.empty()
                                ? (instance.h > 0 ? SchemeKind::kFull : SchemeKind::kDefectiveOnly)
                                : ParseSchemeKind(scheme_name);
    const Scheme scheme = ComposeScheme(kind, instance.n, instance.d, instance.h, instance.z);
    const ItemVector items = instance.Items();
    if (items.defectives().size() > instance.d || items.inhibitors().size() > instance.h) {
      throw DomainError("instance has more items than its d or h allow");
    }
    OutcomeVector outcome = Encode(scheme, items);
    const ErrorStrategy strategy = ParseErrorStrategy(strategy_name);
    std::vector<uint64_t> critical;
    if (strategy == ErrorStrategy::kTargeted) critical = CriticalRows(scheme.matrix, items);
    outcome = InjectErrors(outcome, errors, strategy, seed, critical, allow_unsafe);
    OutcomeFile file;
    file.header = {scheme.kind, scheme.n, scheme.d, scheme.h, scheme.z, scheme.e,
                   scheme.rows(), seed, errors, strategy_name};
    file.bits = std::move(outcome.bits);
    Emit(out_path, FormatOutcome(file), out);
  } else if (decode->parsed()) {
    const OutcomeFile file = ParseOutcome(ReadFile(outcome_path));
    const OutcomeHeader& h = file.header;
    const Scheme scheme = ComposeScheme(h.scheme, h.n, h.d, h.h, h.z);
    if (file.bits.size() != scheme.rows()) {
      throw DomainError("outcome has " + std::to_string(file.bits.size()) +
                        " rows but the scheme has " + std::to_string(scheme.rows()));
    }
    DecodeConfig config;
    config.rule = ParseSanitizeRule(rule_name);
    config.skip_zero_blocks = !no_skip;
    const DecodeResult result = Decode(file.bits, scheme, config);
    nlohmann::ordered_json j;
    j["scheme"] = SchemeKindName(scheme.kind);
    j["rule"] = SanitizeRuleName(config.rule);
    j["defectives"] = result.defectives;
    j["inhibitors"] = result.inhibitors;
    j["counters"] = CountersJson(result.counters);
    Emit(out_path, j.dump() + "\n", out);
  } else if (simulate->parsed()) {
    const SimulationConfig config = ParseSimulationConfig(ReadFile(config_path));
    std::ostringstream csv;
    WriteCsv(csv, RunSimulation(config));
    Emit(out_path, csv.str(), out);
  } else if (bench->parsed()) {
    Emit(out_path,
         FormatBenchCsv(RunBench(bench_ns, o.d, o.H(), o.z, repetitions, seed)), out);
  } else if (trend->parsed()) {
    Emit(out_path, FormatTrendCsv(RunTrend(o.n, trend_ds, o.z)), out);
  } else if (verify->parsed()) {
    const DisjunctCode code(DeriveParams(o.n, d_eff, r, o.z));
    std::vector<DisjunctColumn> columns;
    for (ItemIndex j = 1; j <= o.n; ++j) columns.push_back(code.Column(j));
    const DisjunctVerification v = VerifyDisjunct(columns, code.rows(), d_eff, r, o.z);
    nlohmann::ordered_json j;
    j["n"] = o.n;
    j["d"] = d_eff;
    j["r"] = r;
    j["z"] = o.z;
    j["q"] = code.params().q;
    j["k1"] = code.params().rs.k1;
    j["rows"] = code.rows();
    j["ok"] = v.ok;
    j["checked"] = v.pairs_checked;
    if (!v.ok) {
      j["excluded"] = v.excluded;
      j["included"] = v.included;
    }
    Emit(out_path, j.dump() + "\n", out);
    return v.ok ? kExitOk : kExitCheckFailed;
  } else if (sweep->parsed()) {
    SweepOptions options;
    options.n = o.n;
    options.d = o.d;
    options.h = o.H();
    options.z = o.z;
    options.flip_mode = ParseFlipMode(flip_mode);
    options.samples = samples;
    options.seed = seed;
    options.check_oracle = !no_oracle;
    options.check_skip = !no_skip_check;
    options.check_skip_literal = skip_check_literal;
    Emit(out_path, SweepCsv(ExhaustiveInstanceSweep(options)), out);
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return Run(argc, argv, out);
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace nagti
