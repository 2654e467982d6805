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

#ifndef NAGTI_SIMULATION_H_
#define NAGTI_SIMULATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nagti/decode_defectives.h"
#include "nagti/encoder.h"
#include "nagti/instrumentation.h"
#include "nagti/io.h"

namespace nagti {

// ceil(0.2 d), the default inhibitor count.
uint64_t DefaultInhibitors(uint64_t d);

// Everything `params` prints. Closed forms for the compared schemes use
// log2 n and unit constants; they are orders of magnitude, not test counts.
struct ParamsReport {
  uint64_t n = 0;
  uint64_t d = 0;
  uint64_t h = 0;
  unsigned z = 1;
  unsigned e = 0;
  double lambda = 0;
  unsigned s = 0;
  uint64_t q_m = 0;
  uint64_t k1_m = 0;
  uint64_t m = 0;
  uint64_t t = 0;
  bool full = false;  // G and V exist (h >= 1)
  uint64_t q_g = 0;
  uint64_t k1_g = 0;
  uint64_t g = 0;
  uint64_t v = 0;
  uint64_t column_generation_bound = 0;
  // Reference counts: (d+h+e)^2 log n, (d+h) log n, e (d+h)^3 log n,
  // (d+h^2) log n, lambda^2 log n and lambda^3 log n.
  double ref_chang_defectives = 0;
  double ref_ganesan_defectives = 0;
  double ref_chang_inhibitors = 0;
  double ref_ganesan_inhibitors = 0;
  double ref_lambda2_log_n = 0;
  double ref_lambda3_log_n = 0;
};

ParamsReport ComputeParams(uint64_t n, uint64_t d, uint64_t h, unsigned z);
std::string FormatParams(const ParamsReport& report);  // JSON

// Upper bound on disjunct-code columns a decoder may generate: at most
// m / (e + 1) vote survivors, one reference column, and at most
// g * (m / (e + 1)) / (e + 1) inhibitor candidates for the full scheme.
uint64_t ColumnGenerationBound(const Scheme& scheme);

struct SimulationConfig {
  std::vector<uint64_t> n;
  std::vector<uint64_t> d;
  std::optional<std::vector<uint64_t>> h;  // ceil(0.2 d) when absent
  std::vector<unsigned> z = {1};
  std::optional<unsigned> errors;  // flips per trial; e when absent
  uint64_t trials = 10;
  ErrorStrategy strategy = ErrorStrategy::kUniform;
  std::vector<SanitizeRule> rules = {SanitizeRule::kThreshold};
  std::optional<SchemeKind> scheme;  // by h when absent
  uint64_t seed = 1;
  bool timing = false;
  unsigned workers = 1;
  bool allow_unsafe = false;  // permit errors > e
};

// JSON keys: n, d, h, z or e (z = 2e + 1), errors, trials, strategy, rule or
// rules, scheme, seed, timing, workers, allow_unsafe. n, d, h, z and e take a number or a
// list. Throws ConfigError with the offending line.
SimulationConfig ParseSimulationConfig(std::string_view text);

// One record per (grid point, rule, trial). Trial i of a grid point draws its
// instance and errors from seed + i, so output depends only on the config.
// Records come back in trial-id order whatever the worker count.
std::vector<TrialRecord> RunSimulation(const SimulationConfig& config);

struct BenchRow {
  uint64_t n = 0;
  unsigned log_n = 0;
  uint64_t q_m = 0;
  uint64_t k1_m = 0;
  uint64_t q_g = 0;
  uint64_t k1_g = 0;
  uint64_t rows = 0;
  uint64_t encode_column_generations = 0;
  OpCounters decode;
  uint64_t decode_ns_median = 0;
  unsigned repetitions = 0;
  bool success = false;
};

// Times decoding of one seeded instance at each n; the median of
// `repetitions` (at least 5) runs on a warm cache, steady clock.
std::vector<BenchRow> RunBench(const std::vector<uint64_t>& ns, uint64_t d,
                               uint64_t h, unsigned z, unsigned repetitions,
                               uint64_t seed);
std::string FormatBenchCsv(const std::vector<BenchRow>& rows);

struct TrendRow {
  uint64_t n = 0;
  uint64_t d = 0;
  uint64_t h = 0;
  unsigned z = 1;
  double lambda = 0;
  uint64_t m = 0;
  uint64_t g = 0;
  uint64_t t = 0;
  uint64_t v = 0;
  double t_ratio = 0;  // t over the previous row's t, 0 for the first row
  double v_ratio = 0;
  double t_over_lambda2_log_n = 0;
  double v_over_lambda3_log_n = 0;
};

// Test counts over a d sweep with h = ceil(0.2 d).
std::vector<TrendRow> RunTrend(uint64_t n, const std::vector<uint64_t>& ds,
                               unsigned z);
std::string FormatTrendCsv(const std::vector<TrendRow>& rows);

}  // namespace nagti

#endif  // NAGTI_SIMULATION_H_
