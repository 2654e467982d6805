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

#ifndef NAGTI_ENCODER_H_
#define NAGTI_ENCODER_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nagti/bit_vector.h"
#include "nagti/disjunct.h"
#include "nagti/instrumentation.h"
#include "nagti/measurement.h"
#include "nagti/signature.h"

namespace nagti {

// Assignment of n items to {negative, defective, inhibitor}.
class ItemVector {
 public:
  // Sorts both sets. Throws DomainError unless D is non-empty, D and H are
  // disjoint, duplicate-free and inside [1, n].
  ItemVector(uint64_t n, std::vector<ItemIndex> defectives,
             std::vector<ItemIndex> inhibitors);

  uint64_t n() const { return n_; }
  const std::vector<ItemIndex>& defectives() const { return defectives_; }
  const std::vector<ItemIndex>& inhibitors() const { return inhibitors_; }

 private:
  uint64_t n_;
  std::vector<ItemIndex> defectives_;
  std::vector<ItemIndex> inhibitors_;
};

struct OutcomeVector {
  BitVector bits;
  std::vector<uint64_t> flipped;  // rows flipped by InjectErrors, ascending
  unsigned e_budget = 0;          // flips the scheme is guaranteed to absorb
};

// Test outcomes r = Q (x) x: row i is positive iff some defective is in the
// test and no inhibitor is. Generates exactly |D| + |H| columns of `spec`,
// independent of n; counted in counters->column_generations.
OutcomeVector NagtiEncode(const MeasurementSpec& spec, const ItemVector& items,
                          unsigned e_budget = 0, OpCounters* counters = nullptr);

enum class SchemeKind { kDefectiveOnly, kFull };

// A composed end-to-end scheme. The defective-only scheme is
// T = M (x) S with M a (d+h; z]-disjunct matrix; the full scheme stacks
// V = [M (x) S; G (x) S; G] with G a (max(d+h-2, 1), 2; z]-disjunct matrix.
struct Scheme {
  SchemeKind kind = SchemeKind::kDefectiveOnly;
  uint64_t n = 0;
  uint64_t d = 0;
  uint64_t h = 0;
  unsigned z = 1;
  unsigned e = 0;
  double lambda = 0;  // (d+h) ln n / W((d+h) ln n) + z
  SignatureSpec signature;
  std::shared_ptr<const DisjunctCode> outer;  // M
  std::shared_ptr<const DisjunctCode> pair;   // G, full scheme only
  MeasurementSpec matrix;

  unsigned s() const { return signature.s(); }
  uint64_t m() const { return outer->rows(); }
  uint64_t g() const { return pair ? pair->rows() : 0; }
  uint64_t t() const { return m() * s(); }
  uint64_t h_rows() const { return g() * s(); }
  uint64_t rows() const { return matrix.rows(); }
};

// Throws DomainError for n not a power of two, d < 1 or z even.
Scheme ComposeDefectiveScheme(uint64_t n, uint64_t d, uint64_t h, unsigned z);
// As above, and h must be >= 1: with no inhibitors to find use
// ComposeDefectiveScheme (or ComposeScheme, which dispatches).
Scheme ComposeFullScheme(uint64_t n, uint64_t d, uint64_t h, unsigned z);
Scheme ComposeScheme(SchemeKind kind, uint64_t n, uint64_t d, uint64_t h,
                     unsigned z);

std::string SchemeKindName(SchemeKind kind);
// Accepts "defective_only"/"defective" and "full". Throws DomainError.
SchemeKind ParseSchemeKind(const std::string& name);

inline OutcomeVector Encode(const Scheme& scheme, const ItemVector& items,
                            OpCounters* counters = nullptr) {
  return NagtiEncode(scheme.matrix, items, scheme.e, counters);
}

enum class ErrorStrategy { kUniform, kTargeted };

std::string ErrorStrategyName(ErrorStrategy strategy);
ErrorStrategy ParseErrorStrategy(const std::string& name);

// Rows where at least one defective's column is 1.
std::vector<uint64_t> CriticalRows(const MeasurementSpec& spec,
                                   const ItemVector& items);

// Flips exactly e distinct rows chosen by a generator seeded with `seed`.
// kUniform draws from every row; kTargeted draws from `critical_rows` first
// and only falls back to other rows when there are fewer than e of them.
// The chosen rows depend only on (size, e, strategy, seed, critical_rows),
// so applying the same call twice restores the input.
// Throws DomainError when e exceeds outcome.e_budget unless allow_unsafe,
// or when e exceeds the number of rows.
OutcomeVector InjectErrors(const OutcomeVector& outcome, unsigned e,
                           ErrorStrategy strategy, uint64_t seed,
                           std::span<const uint64_t> critical_rows = {},
                           bool allow_unsafe = false);

}  // namespace nagti

#endif  // NAGTI_ENCODER_H_
