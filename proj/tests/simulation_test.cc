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

#include <cmath>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "nagti/errors.h"
#include "nagti/lambert_w.h"

namespace nagti {
namespace {

TEST(Params, Formulas) {
  EXPECT_EQ(DefaultInhibitors(1), 1u);
  EXPECT_EQ(DefaultInhibitors(5), 1u);
  EXPECT_EQ(DefaultInhibitors(6), 2u);
  for (unsigned log_n : {8u, 16u, 32u})
    for (uint64_t d : {2u, 8u, 32u}) {
      const uint64_t n = uint64_t{1} << log_n;
      const uint64_t h = DefaultInhibitors(d);
      const ParamsReport p = ComputeParams(n, d, h, 3);
      EXPECT_EQ(p.s, 2 * log_n);
      EXPECT_EQ(p.t, p.m * 2 * log_n);
      EXPECT_EQ(p.v, p.t + p.g * p.s + p.g);
      EXPECT_EQ(p.e, 1u);
      const double x = double(d + h) * std::log(double(n));
      const double lambda = x / LambertW(x) + 3;
      EXPECT_LE(std::abs(p.lambda - lambda), 1e-9 * lambda);
    }
}

TEST(Params, Json) {
  const std::string text = FormatParams(ComputeParams(16, 2, 1, 1));
  EXPECT_NE(text.find("\"t\": 448"), std::string::npos) << text;
  EXPECT_NE(text.find("\"v\": 2212"), std::string::npos) << text;
}

TEST(SimulationConfig, Parse) {
  const SimulationConfig c = ParseSimulationConfig(
      R"({"n": [256, 1024], "d": 4, "e": 1, "trials": 3, "rules": ["threshold", "literal"],
          "strategy": "targeted", "seed": 7})");
  EXPECT_EQ(c.n, (std::vector<uint64_t>{256, 1024}));
  EXPECT_EQ(c.z, (std::vector<unsigned>{3}));
  EXPECT_EQ(c.rules.size(), 2u);
  EXPECT_EQ(c.strategy, ErrorStrategy::kTargeted);
  EXPECT_FALSE(c.h.has_value());
  EXPECT_THROW(ParseSimulationConfig(R"({"n": 256})"), ConfigError);
  EXPECT_THROW(ParseSimulationConfig(R"({"n": 256, "d": 2, "z": 3, "e": 1})"), ConfigError);
  EXPECT_THROW(ParseSimulationConfig("{\"n\": 256,\n\"d\": 2,\n\"trails\": 3}"), ConfigError);
  try {
    ParseSimulationConfig("{\"n\": 256,\n\"d\": 2,\n\"rule\": \"fuzzy\"}");
    FAIL();
  } catch (const ConfigError& err) {
    EXPECT_NE(std::string(err.what()).find(":3:"), std::string::npos) << err.what();
  }
}

std::string Csv(const SimulationConfig& config) {
  std::ostringstream out;
  WriteCsv(out, RunSimulation(config));
  return out.str();
}

TEST(Simulation, NoiselessGridSucceedsAndIsDeterministic) {
  SimulationConfig config = ParseSimulationConfig(
      R"({"n": [64, 4096], "d": [2, 6], "z": [1, 3], "trials": 4, "seed": 11})");
  const std::vector<TrialRecord> records = RunSimulation(config);
  ASSERT_EQ(records.size(), 2u * 2 * 2 * 4);
  for (size_t i = 0; i < records.size(); ++i) {
    const TrialRecord& r = records[i];
    EXPECT_EQ(r.trial_id, i);
    EXPECT_TRUE(r.success) << CsvRow(r);
    EXPECT_EQ(r.errors, r.e);
    EXPECT_LE(r.column_generations, r.column_generation_bound);
    EXPECT_EQ(r.tests, ComposeScheme(r.scheme, r.n, r.d, r.h, r.z).rows());
  }
  const std::string once = Csv(config);
  EXPECT_EQ(Csv(config), once);
  config.workers = 3;
  EXPECT_EQ(Csv(config), once);
}

TEST(Simulation, UnsafeErrorsNeedOptIn) {
  SimulationConfig config = ParseSimulationConfig(R"({"n": 64, "d": 2, "z": 1, "errors": 2})");
  EXPECT_THROW(RunSimulation(config), DomainError);
  config.allow_unsafe = true;
  EXPECT_EQ(RunSimulation(config).size(), 10u);
}

TEST(Trend, RatiosAndCsv) {
  const auto rows = RunTrend(uint64_t{1} << 20, {2, 4, 8}, 1);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].t_ratio, 0.0);
  EXPECT_DOUBLE_EQ(rows[1].t_ratio, double(rows[1].t) / double(rows[0].t));
  EXPECT_EQ(rows[2].h, 2u);
  const std::string csv = FormatTrendCsv(rows);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST(Bench, Rows) {
  const auto rows = RunBench({1 << 10, 1 << 16}, 2, 1, 3, 5, 1);
  ASSERT_EQ(rows.size(), 2u);
  for (const BenchRow& r : rows) {
    EXPECT_TRUE(r.success);
    EXPECT_EQ(r.encode_column_generations, 3u);
    EXPECT_EQ(r.repetitions, 5u);
  }
  EXPECT_EQ(RunBench({1 << 10}, 2, 1, 3, 2, 1).front().repetitions, 5u);
}

}  // namespace
}  // namespace nagti
