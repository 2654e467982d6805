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

#include "nagti/io.h"

#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "json_support.h"
#include "nagti/errors.h"

namespace nagti {

using internal::JsonReader;

InstanceFile ParseInstance(std::string_view text) {
  JsonReader reader(text, "instance");
  reader.RequireKnownKeys({"n", "d", "h", "z", "defectives", "inhibitors", "seed"});
  InstanceFile out;
  out.n = reader.UInt("n");
  out.defectives = reader.UIntList("defectives");
  out.inhibitors = reader.Has("inhibitors") ? reader.UIntList("inhibitors")
                                            : std::vector<ItemIndex>{};
  out.d = reader.UInt("d", out.defectives.size());
  out.h = reader.UInt("h", out.inhibitors.size());
  const uint64_t z = reader.UInt("z", 1);
  if (z % 2 == 0 || z > 1'000'000) reader.Fail("z", "must be a small odd integer");
  out.z = static_cast<unsigned>(z);
  out.seed = reader.UInt("seed", 0);
  try {
    out.Items();
  } catch (const DomainError& err) {
    reader.Fail("defectives", err.what());
  }
  return out;
}

std::string FormatInstance(const InstanceFile& instance) {
  nlohmann::ordered_json j;
  j["n"] = instance.n;
  j["d"] = instance.d;
  j["h"] = instance.h;
  j["z"] = instance.z;
  j["defectives"] = instance.defectives;
  j["inhibitors"] = instance.inhibitors;
  j["seed"] = instance.seed;
  return j.dump(2) + "\n";
}

OutcomeFile ParseOutcome(std::string_view text) {
  const size_t newline = text.find('\n');
  if (newline == std::string_view::npos) {
    throw ConfigError("outcome:1: expected a JSON header line followed by a hex line");
  }
  JsonReader reader(text.substr(0, newline), "outcome");
  OutcomeFile out;
  OutcomeHeader& h = out.header;
  try {
    h.scheme = ParseSchemeKind(reader.String("scheme", "full"));
  } catch (const DomainError& err) {
    reader.Fail("scheme", err.what());
  }
  h.n = reader.UInt("n");
  h.d = reader.UInt("d");
  h.h = reader.UInt("h", 0);
  h.z = static_cast<unsigned>(reader.UInt("z", 1));
  h.e = static_cast<unsigned>(reader.UInt("e", (h.z - 1) / 2));
  h.rows = reader.UInt("rows");
  h.seed = reader.UInt("seed", 0);
  h.errors = static_cast<unsigned>(reader.UInt("errors", 0));
  h.strategy = reader.String("strategy", "uniform");

  std::string_view hex = text.substr(newline + 1);
  while (!hex.empty() && (hex.back() == '\n' || hex.back() == '\r' || hex.back() == ' ')) {
    hex.remove_suffix(1);
  }
  try {
    out.bits = BitVector::FromHex(hex, h.rows);
  } catch (const DomainError& err) {
    throw ConfigError(std::string("outcome:2: ") + err.what());
  }
  return out;
}

std::string FormatOutcome(const OutcomeFile& outcome) {
  const OutcomeHeader& h = outcome.header;
  nlohmann::ordered_json j;
  j["scheme"] = SchemeKindName(h.scheme);
  j["n"] = h.n;
  j["d"] = h.d;
  j["h"] = h.h;
  j["z"] = h.z;
  j["e"] = h.e;
  j["rows"] = outcome.bits.size();
  j["seed"] = h.seed;
  j["errors"] = h.errors;
  j["strategy"] = h.strategy;
  return j.dump() + "\n" + outcome.bits.ToHex() + "\n";
}

std::string CsvHeader() {
  return "schema_version,trial_id,n,d,h,z,e,scheme,rule,tests,decode_time_ns,"
         "column_generations,column_generation_bound,success,false_pos,false_neg,"
         "seed,errors,strategy";
}

std::string CsvRow(const TrialRecord& r) {
  std::ostringstream out;
  out << kCsvSchemaVersion << ',' << r.trial_id << ',' << r.n << ',' << r.d << ','
      << r.h << ',' << r.z << ',' << r.e << ',' << SchemeKindName(r.scheme) << ','
      << SanitizeRuleName(r.rule) << ',' << r.tests << ',' << r.decode_time_ns << ','
      << r.column_generations << ',' << r.column_generation_bound << ','
      << (r.success ? "true" : "false") << ',' << r.false_pos << ',' << r.false_neg
      << ',' << r.seed << ',' << r.errors << ',' << r.strategy;
  return out.str();
}

void WriteCsv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << CsvHeader() << '\n';
  for (const TrialRecord& r : records) out << CsvRow(r) << '\n';
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw ConfigError("write to '" + path + "' failed");
}

}  // namespace nagti
