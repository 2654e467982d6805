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

#include "nagti/simulation.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <random>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "json_support.h"
#include "nagti/decode_inhibitors.h"
#include "nagti/errors.h"

namespace nagti {
namespace {

ItemVector RandomInstance(uint64_t n, uint64_t d, uint64_t h, std::mt19937_64& rng) {
  if (d < 1 || d + h > n) throw DomainError("need 1 <= d and d + h <= n");
  std::uniform_int_distribution<uint64_t> pick(1, n);
  std::set<ItemIndex> taken;
  std::vector<ItemIndex> defectives;
  std::vector<ItemIndex> inhibitors;
  while (defectives.size() < d) {
    const ItemIndex j = pick(rng);
    if (taken.insert(j).second) defectives.push_back(j);
  }
  while (inhibitors.size() < h) {
    const ItemIndex j = pick(rng);
    if (taken.insert(j).second) inhibitors.push_back(j);
  }
  return ItemVector(n, std::move(defectives), std::move(inhibitors));
}

uint64_t CountMissing(const std::vector<ItemIndex>& truth,
                      const std::vector<ItemIndex>& found) {
  uint64_t missing = 0;
  for (ItemIndex j : truth) {
    if (!std::binary_search(found.begin(), found.end(), j)) ++missing;
  }
  return missing;
}

double Log2(uint64_t n) { return std::log2(static_cast<double>(n)); }

}  // namespace

uint64_t DefaultInhibitors(uint64_t d) { return (d + 4) / 5; }

uint64_t ColumnGenerationBound(const Scheme& scheme) {
  const uint64_t survivors = scheme.m() / (scheme.e + 1);
  if (scheme.kind != SchemeKind::kFull) return survivors;
  return survivors + 1 + scheme.g() * survivors / (scheme.e + 1);
}

ParamsReport ComputeParams(uint64_t n, uint64_t d, uint64_t h, unsigned z) {
  const Scheme scheme = ComposeScheme(h > 0 ? SchemeKind::kFull : SchemeKind::kDefectiveOnly,
                                      n, d, h, z);
  ParamsReport r;
  r.n = n;
  r.d = d;
  r.h = h;
  r.z = z;
  r.e = scheme.e;
  r.lambda = scheme.lambda;
  r.s = scheme.s();
  r.q_m = scheme.outer->params().q;
  r.k1_m = scheme.outer->params().rs.k1;
  r.m = scheme.m();
  r.t = scheme.t();
  r.full = scheme.kind == SchemeKind::kFull;
  if (r.full) {
    r.q_g = scheme.pair->params().q;
    r.k1_g = scheme.pair->params().rs.k1;
    r.g = scheme.g();
    r.v = scheme.rows();
  }
  r.column_generation_bound = ColumnGenerationBound(scheme);
  const double log_n = Log2(n);
  const double dh = static_cast<double>(d + h);
  const double e = static_cast<double>(r.e);
  r.ref_chang_defectives = (dh + e) * (dh + e) * log_n;
  r.ref_ganesan_defectives = dh * log_n;
  r.ref_chang_inhibitors = std::max(e, 1.0) * dh * dh * dh * log_n;
  r.ref_ganesan_inhibitors = (static_cast<double>(d) + double(h) * double(h)) * log_n;
  r.ref_lambda2_log_n = r.lambda * r.lambda * log_n;
  r.ref_lambda3_log_n = r.lambda * r.lambda * r.lambda * log_n;
  return r;
}

std::string FormatParams(const ParamsReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["h"] = r.h;
  j["z"] = r.z;
  j["e"] = r.e;
  j["lambda"] = r.lambda;
  j["s"] = r.s;
  j["q_m"] = r.q_m;
  j["k1_m"] = r.k1_m;
  j["m"] = r.m;
  j["t"] = r.t;
  if (r.full) {
    j["q_g"] = r.q_g;
    j["k1_g"] = r.k1_g;
    j["g"] = r.g;
    j["v"] = r.v;
  }
  j["column_generation_bound"] = r.column_generation_bound;
  j["reference"] = {
      {"chang_defectives_(d+h+e)^2_log_n", r.ref_chang_defectives},
      {"ganesan_defectives_(d+h)_log_n", r.ref_ganesan_defectives},
      {"chang_inhibitors_e(d+h)^3_log_n", r.ref_chang_inhibitors},
      {"ganesan_inhibitors_(d+h^2)_log_n", r.ref_ganesan_inhibitors},
      {"lambda^2_log_n", r.ref_lambda2_log_n},
      {"lambda^3_log_n", r.ref_lambda3_log_n},
  };
  return j.dump(2) + "\n";
}

SimulationConfig ParseSimulationConfig(std::string_view text) {
  internal::JsonReader reader(text, "config");
  reader.RequireKnownKeys({"n", "d", "h", "z", "e", "errors", "trials", "strategy", "rule",
                           "rules", "scheme", "seed", "timing", "workers",
                           "allow_unsafe"});
  SimulationConfig c;
  c.n = reader.UIntList("n");
  for (uint64_t n : c.n) {
    if (n < 2 || (n & (n - 1)) != 0 || n > (uint64_t{1} << 32)) {
      reader.Fail("n", "every n must be a power of two in [2, 2^32]");
    }
  }
  c.d = reader.UIntList("d");
  for (uint64_t d : c.d) {
    if (d < 1) reader.Fail("d", "every d must be >= 1");
  }
  if (reader.Has("h")) c.h = reader.UIntList("h");
  if (reader.Has("z") && reader.Has("e")) reader.Fail("e", "give z or e, not both");
  if (reader.Has("z")) {
    c.z.clear();
    for (uint64_t z : reader.UIntList("z")) {
      if (z % 2 == 0 || z > 1'000'001) reader.Fail("z", "every z must be a small odd integer");
      c.z.push_back(static_cast<unsigned>(z));
    }
  } else if (reader.Has("e")) {
    c.z.clear();
    for (uint64_t e : reader.UIntList("e")) {
      if (e > 500'000) reader.Fail("e", "error budget too large");
      c.z.push_back(static_cast<unsigned>(2 * e + 1));
    }
  }
  if (reader.Has("errors")) {
    const uint64_t errors = reader.UInt("errors");
    if (errors > 1'000'000) reader.Fail("errors", "too many flips");
    c.errors = static_cast<unsigned>(errors);
  }
  c.trials = reader.UInt("trials", c.trials);
  try {
    c.strategy = ParseErrorStrategy(reader.String("strategy", "uniform"));
  } catch (const DomainError& err) {
    reader.Fail("strategy", err.what());
  }
  if (reader.Has("rule") && reader.Has("rules")) reader.Fail("rules", "give rule or rules");
  const std::string rule_key = reader.Has("rules") ? "rules" : "rule";
  if (reader.Has(rule_key)) {
    c.rules.clear();
    const nlohmann::json& value = reader.root().at(rule_key);
    std::vector<nlohmann::json> items =
        value.is_array() ? value.get<std::vector<nlohmann::json>>()
                         : std::vector<nlohmann::json>{value};
    for (const auto& item : items) {
      if (!item.is_string()) reader.Fail(rule_key, "expected rule names");
      try {
        c.rules.push_back(ParseSanitizeRule(item.get<std::string>()));
      } catch (const DomainError& err) {
        reader.Fail(rule_key, err.what());
      }
    }
    if (c.rules.empty()) reader.Fail(rule_key, "at least one rule is required");
  }
  const std::string scheme = reader.String("scheme", "auto");
  if (scheme != "auto") {
    try {
      c.scheme = ParseSchemeKind(scheme);
    } catch (const DomainError& err) {
      reader.Fail("scheme", err.what());
    }
  }
  c.seed = reader.UInt("seed", c.seed);
  c.timing = reader.Bool("timing", c.timing);
  const uint64_t workers = reader.UInt("workers", 1);
  if (workers < 1 || workers > 256) reader.Fail("workers", "must be in [1, 256]");
  c.workers = static_cast<unsigned>(workers);
  if (reader.Bool("allow_unsafe", false)) c.allow_unsafe = true;
  return c;
}

std::vector<TrialRecord> RunSimulation(const SimulationConfig& config) {
  struct Point {
    Scheme scheme;
    SanitizeRule rule;
    uint64_t bound;
  };
  struct Job {
    size_t point;
    uint64_t trial_id;
  };
  std::vector<Point> points;
  std::vector<Job> jobs;
  uint64_t trial_id = 0;
  for (uint64_t n : config.n) {
    for (uint64_t d : config.d) {
      const std::vector<uint64_t> hs =
          config.h ? *config.h : std::vector<uint64_t>{DefaultInhibitors(d)};
      for (uint64_t h : hs) {
        for (unsigned z : config.z) {
          const SchemeKind kind =
              config.scheme.value_or(h > 0 ? SchemeKind::kFull : SchemeKind::kDefectiveOnly);
          const Scheme scheme = ComposeScheme(kind, n, d, h, z);
          const unsigned flips = config.errors.value_or(scheme.e);
          if (flips > scheme.e && !config.allow_unsafe) {
            throw DomainError("errors = " + std::to_string(flips) + " exceeds e = " +
                              std::to_string(scheme.e) + " at z = " + std::to_string(z) +
                              "; set allow_unsafe to run it anyway");
          }
          for (SanitizeRule rule : config.rules) {
            points.push_back({scheme, rule, ColumnGenerationBound(scheme)});
            for (uint64_t k = 0; k < config.trials; ++k) {
              jobs.push_back({points.size() - 1, trial_id++});
            }
          }
        }
      }
    }
  }

  std::vector<TrialRecord> records(jobs.size());
  auto run_job = [&](const Job& job) {
    const Point& point = points[job.point];
    const Scheme& scheme = point.scheme;
    const uint64_t seed = config.seed + job.trial_id;
    std::mt19937_64 rng(seed);
    const ItemVector items = RandomInstance(scheme.n, scheme.d, scheme.h, rng);
    OutcomeVector outcome = Encode(scheme, items);
    const unsigned flips = config.errors.value_or(scheme.e);
    std::vector<uint64_t> critical;
    if (config.strategy == ErrorStrategy::kTargeted) {
      critical = CriticalRows(scheme.matrix, items);
    }
    outcome = InjectErrors(outcome, flips, config.strategy, rng(), critical, config.allow_unsafe);

    TrialRecord& r = records[job.trial_id];
    r.trial_id = job.trial_id;
    r.n = scheme.n;
    r.d = scheme.d;
    r.h = scheme.h;
    r.z = scheme.z;
    r.e = scheme.e;
    r.scheme = scheme.kind;
    r.rule = point.rule;
    r.tests = scheme.rows();
    r.column_generation_bound = point.bound;
    r.seed = seed;
    r.errors = flips;
    r.strategy = ErrorStrategyName(config.strategy);

    DecodeConfig decode_config;
    decode_config.rule = point.rule;
    const auto start = std::chrono::steady_clock::now();
    try {
      const DecodeResult result = Decode(outcome.bits, scheme, decode_config);
      if (config.timing) {
        r.decode_time_ns = static_cast<uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(
                std::chrono::steady_clock::now() - start)
                .count());
      }
      r.column_generations = result.counters.column_generations;
      const bool full = scheme.kind == SchemeKind::kFull;
      r.false_neg = CountMissing(items.defectives(), result.defectives);
      r.false_pos = CountMissing(result.defectives, items.defectives());
      if (full) {
        r.false_neg += CountMissing(items.inhibitors(), result.inhibitors);
        r.false_pos += CountMissing(result.inhibitors, items.inhibitors());
      }
      r.success = r.false_neg == 0 && r.false_pos == 0;
    } catch (const DomainError&) {
      r.success = false;
      r.false_neg = items.defectives().size() +
                    (scheme.kind == SchemeKind::kFull ? items.inhibitors().size() : 0);
    }
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(config.workers, static_cast<unsigned>(jobs.size())));
  if (workers == 1) {
    for (const Job& job : jobs) run_job(job);
    return records;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      try {
        for (size_t i = next++; i < jobs.size(); i = next++) run_job(jobs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& thread : threads) thread.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::vector<BenchRow> RunBench(const std::vector<uint64_t>& ns, uint64_t d, uint64_t h,
                               unsigned z, unsigned repetitions, uint64_t seed) {
  repetitions = std::max(repetitions, 5u);
  std::vector<BenchRow> rows;
  for (uint64_t n : ns) {
    const Scheme scheme =
        ComposeScheme(h > 0 ? SchemeKind::kFull : SchemeKind::kDefectiveOnly, n, d, h, z);
    std::mt19937_64 rng(seed);
    const ItemVector items = RandomInstance(n, d, h, rng);
    BenchRow row;
    row.n = n;
    row.log_n = scheme.signature.log_n();
    row.q_m = scheme.outer->params().q;
    row.k1_m = scheme.outer->params().rs.k1;
    if (scheme.pair) {
      row.q_g = scheme.pair->params().q;
      row.k1_g = scheme.pair->params().rs.k1;
    }
    row.rows = scheme.rows();
    OpCounters encode_counters;
    OutcomeVector outcome = Encode(scheme, items, &encode_counters);
    row.encode_column_generations = encode_counters.column_generations;
    outcome = InjectErrors(outcome, scheme.e, ErrorStrategy::kUniform, rng());

    DecodeResult warm = Decode(outcome.bits, scheme);
    std::vector<uint64_t> times;
    for (unsigned k = 0; k < repetitions; ++k) {
      const auto start = std::chrono::steady_clock::now();
      DecodeResult result = Decode(outcome.bits, scheme);
      times.push_back(static_cast<uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(
              std::chrono::steady_clock::now() - start)
              .count()));
      warm = std::move(result);
    }
    std::sort(times.begin(), times.end());
    row.decode_ns_median = times[times.size() / 2];
    row.repetitions = repetitions;
    row.decode = warm.counters;
    row.success = warm.defectives == items.defectives() &&
                  (scheme.kind != SchemeKind::kFull || warm.inhibitors == items.inhibitors());
    rows.push_back(row);
  }
  return rows;
}

std::string FormatBenchCsv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,log_n,q_m,k1_m,q_g,k1_g,rows,encode_column_generations,"
         "decode_column_generations,blocks_examined,inversions,candidates_checked,"
         "decode_ns_median,repetitions,success\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.log_n << ',' << r.q_m << ',' << r.k1_m << ',' << r.q_g << ','
        << r.k1_g << ',' << r.rows << ',' << r.encode_column_generations << ','
        << r.decode.column_generations << ',' << r.decode.blocks_examined << ','
        << r.decode.inversions << ',' << r.decode.candidates_checked << ','
        << r.decode_ns_median << ',' << r.repetitions << ','
        << (r.success ? "true" : "false") << '\n';
  }
  return out.str();
}

std::vector<TrendRow> RunTrend(uint64_t n, const std::vector<uint64_t>& ds, unsigned z) {
  std::vector<TrendRow> rows;
  const unsigned s = SignatureSpec(n).s();
  const double log_n = Log2(n);
  for (uint64_t d : ds) {
    TrendRow row;
    row.n = n;
    row.d = d;
    row.h = DefaultInhibitors(d);
    row.z = z;
    row.lambda = SchemeLambda(n, d + row.h, z);
    row.m = DeriveParams(n, d + row.h, 1, z).rows;
    const uint64_t pair_d = d + row.h > 2 ? d + row.h - 2 : 1;
    row.g = DeriveParams(n, pair_d, 2, z).rows;
    row.t = row.m * s;
    row.v = row.t + row.g * s + row.g;
    if (!rows.empty()) {
      row.t_ratio = double(row.t) / double(rows.back().t);
      row.v_ratio = double(row.v) / double(rows.back().v);
    }
    row.t_over_lambda2_log_n = double(row.t) / (row.lambda * row.lambda * log_n);
    row.v_over_lambda3_log_n = double(row.v) / (row.lambda * row.lambda * row.lambda * log_n);
    rows.push_back(row);
  }
  return rows;
}

std::string FormatTrendCsv(const std::vector<TrendRow>& rows) {
  std::ostringstream out;
  out.precision(10);
  out << "n,d,h,z,lambda,m,g,t,v,t_ratio,v_ratio,t_over_lambda2_log_n,"
         "v_over_lambda3_log_n\n";
  for (const TrendRow& r : rows) {
    out << r.n << ',' << r.d << ',' << r.h << ',' << r.z << ',' << r.lambda << ',' << r.m
        << ',' << r.g << ',' << r.t << ',' << r.v << ',' << r.t_ratio << ',' << r.v_ratio
        << ',' << r.t_over_lambda2_log_n << ',' << r.v_over_lambda3_log_n << '\n';
  }
  return out.str();
}

}  // namespace nagti
