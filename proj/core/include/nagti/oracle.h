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

#ifndef NAGTI_ORACLE_H_
#define NAGTI_ORACLE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nagti/bit_vector.h"
#include "nagti/decode_defectives.h"
#include "nagti/encoder.h"
#include "nagti/measurement.h"

namespace nagti {

// Cap on the candidate count of every exhaustive search.
inline constexpr uint64_t kOracleGuard = 10'000'000;

// Encodes through the sorted row lists of MeasurementSpec::Column rather than
// the block path the encoder uses.
BitVector ReferenceEncode(const MeasurementSpec& spec, const ItemVector& items);

// Number of (D, H) with 1 <= |D| <= d, |H| <= h, D and H disjoint.
uint64_t InstanceCount(uint64_t n, uint64_t d, uint64_t h);

// Every such (D, H), ordered by |D|, then |H|, then lexicographically. Throws
// GuardError when binomial(n, d) * binomial(n, h) > kOracleGuard.
std::vector<ItemVector> EnumerateInstances(uint64_t n, uint64_t d, uint64_t h);

struct Explanation {
  std::vector<ItemIndex> defectives;
  std::vector<ItemIndex> inhibitors;
  uint64_t distance = 0;
};

// Every (D, H) as above whose encoding lies within Hamming distance e of
// `outcome`. Throws GuardError under the same condition as
// EnumerateInstances.
std::vector<Explanation> BruteForceDecode(const BitVector& outcome,
                                          const MeasurementSpec& spec, uint64_t d,
                                          uint64_t h, unsigned e);

// BruteForceDecode with every candidate encoding cached, for sweeps that ask
// about many outcomes under one matrix.
class ExplanationIndex {
 public:
  ExplanationIndex(const MeasurementSpec& spec, uint64_t d, uint64_t h);

  const std::vector<ItemVector>& instances() const { return instances_; }
  const BitVector& encoding(size_t i) const { return encodings_[i]; }

  std::vector<Explanation> Explain(const BitVector& outcome, unsigned e) const;
  // Same, as positions in instances().
  std::vector<size_t> ExplainIndices(const BitVector& outcome, unsigned e) const;

  struct Neighbour {
    size_t index;
    uint64_t distance;
  };
  // Candidates within `radius` of encoding(i).
  std::vector<Neighbour> Neighbours(size_t i, uint64_t radius) const;

  // Indices of the explanations of encoding(i) with the given distinct rows
  // flipped, where `near` = Neighbours(i, 2e) and flips.size() <= e. Only
  // those candidates can come within e of the flipped outcome, and each
  // flip moves their distance by exactly one, so nothing is rescanned.
  std::vector<size_t> ExplainFlipped(size_t i, std::span<const Neighbour> near,
                                     std::span<const uint64_t> flips,
                                     unsigned e) const;

 private:
  std::vector<ItemVector> instances_;
  std::vector<BitVector> encodings_;
};

enum class FlipMode {
  kNone,        // clean outcomes only
  kExhaustive,  // every pattern of at most e flips
  kSampled,     // seeded random patterns of exactly e flips
};

std::string FlipModeName(FlipMode mode);
FlipMode ParseFlipMode(const std::string& name);

struct SweepOptions {
  uint64_t n = 16;
  uint64_t d = 2;
  uint64_t h = 1;
  unsigned z = 1;
  FlipMode flip_mode = FlipMode::kExhaustive;
  // kExhaustive switches to sampling above this many decode cases per scheme.
  uint64_t case_budget = 100'000'000;
  uint64_t samples = 100'000;  // cases per scheme when sampling
  uint64_t seed = 1;
  bool run_literal = true;
  // Check every threshold-rule output against the explanation list.
  bool check_oracle = true;
  // Decode the full scheme a second time without the zero-block skip.
  bool check_skip = true;
  // Repeat that comparison under the literal rule as well.
  bool check_skip_literal = false;
};

// Outcome of one decoder under one rule over a sweep.
struct RuleTally {
  uint64_t cases = 0;
  uint64_t exact = 0;
  uint64_t decode_errors = 0;  // decoder threw (no defective survived)
  uint64_t false_pos_defectives = 0;
  uint64_t false_neg_defectives = 0;
  uint64_t false_pos_inhibitors = 0;
  uint64_t false_neg_inhibitors = 0;
  // Cases where sanitization removed a true item that had enough votes.
  uint64_t removed_true_defectives = 0;
  uint64_t removed_true_inhibitors = 0;
  // Cases whose output is not among the consistent explanations.
  uint64_t oracle_violations = 0;

  double ExactRate() const { return cases == 0 ? 0.0 : double(exact) / double(cases); }
};

struct SweepReport {
  SweepOptions options;
  unsigned e = 0;
  uint64_t instances = 0;
  bool sampled = false;
  uint64_t t_rows = 0;
  uint64_t v_rows = 0;
  RuleTally defective_threshold;  // T scheme
  RuleTally defective_literal;
  RuleTally full_threshold;  // V scheme
  RuleTally full_literal;
  // T-scheme outcomes whose explanations disagree on D.
  uint64_t uniqueness_violations = 0;
  uint64_t oracle_checks = 0;
  // Instances where the encoder and ReferenceEncode disagree.
  uint64_t encoding_mismatches = 0;
  // Full-scheme cases where the zero-block skip changed the output.
  uint64_t skip_mismatches = 0;
  uint64_t skip_checks = 0;
};

// Runs both decoders under both rules over every instance and every flip
// pattern allowed by options.flip_mode.
SweepReport ExhaustiveInstanceSweep(const SweepOptions& options);

}  // namespace nagti

#endif  // NAGTI_ORACLE_H_
