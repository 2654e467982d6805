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

#ifndef NAGTI_IO_H_
#define NAGTI_IO_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nagti/bit_vector.h"
#include "nagti/decode_defectives.h"
#include "nagti/encoder.h"

namespace nagti {

// Instance file: one JSON object with n, d, h, z, defectives, inhibitors and
// seed. d, h and z describe the scheme the instance is meant for.
struct InstanceFile {
  uint64_t n = 0;
  uint64_t d = 0;
  uint64_t h = 0;
  unsigned z = 1;
  std::vector<ItemIndex> defectives;
  std::vector<ItemIndex> inhibitors;
  uint64_t seed = 0;

  ItemVector Items() const { return ItemVector(n, defectives, inhibitors); }
};

// Throw ConfigError carrying the line and column of the first problem.
InstanceFile ParseInstance(std::string_view text);
std::string FormatInstance(const InstanceFile& instance);

// Outcome file: a JSON header line naming the scheme, then the outcome as
// lowercase hex, first row in the most significant bit.
struct OutcomeHeader {
  SchemeKind scheme = SchemeKind::kFull;
  uint64_t n = 0;
  uint64_t d = 0;
  uint64_t h = 0;
  unsigned z = 1;
  unsigned e = 0;
  uint64_t rows = 0;
  uint64_t seed = 0;
  unsigned errors = 0;  // flips injected
  std::string strategy = "uniform";
};

struct OutcomeFile {
  OutcomeHeader header;
  BitVector bits;
};

OutcomeFile ParseOutcome(std::string_view text);
std::string FormatOutcome(const OutcomeFile& outcome);

// Results CSV. Bump kCsvSchemaVersion whenever a column changes.
inline constexpr int kCsvSchemaVersion = 1;

struct TrialRecord {
  uint64_t trial_id = 0;
  uint64_t n = 0;
  uint64_t d = 0;
  uint64_t h = 0;
  unsigned z = 1;
  unsigned e = 0;
  SchemeKind scheme = SchemeKind::kFull;
  SanitizeRule rule = SanitizeRule::kThreshold;
  uint64_t tests = 0;
  uint64_t decode_time_ns = 0;  // 0 unless timing was requested
  uint64_t column_generations = 0;
  uint64_t column_generation_bound = 0;
  bool success = false;
  uint64_t false_pos = 0;
  uint64_t false_neg = 0;
  uint64_t seed = 0;
  unsigned errors = 0;
  std::string strategy = "uniform";
};

std::string CsvHeader();
std::string CsvRow(const TrialRecord& record);
void WriteCsv(std::ostream& out, const std::vector<TrialRecord>& records);

// Reads a whole file; throws ConfigError when it cannot be opened.
std::string ReadFile(const std::string& path);
// Throws ConfigError when the file cannot be written.
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace nagti

#endif  // NAGTI_IO_H_
