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

#ifndef NAGTI_DECODE_INHIBITORS_H_
#define NAGTI_DECODE_INHIBITORS_H_

#include <span>
#include <vector>

#include "nagti/bit_vector.h"
#include "nagti/decode_defectives.h"
#include "nagti/encoder.h"
#include "nagti/instrumentation.h"

namespace nagti {

struct DecodeResult {
  std::vector<ItemIndex> defectives;  // ascending
  std::vector<ItemIndex> inhibitors;  // ascending
  // Sets before sanitization: items with at least e + 1 votes, and inhibitor
  // candidates that passed the multiplicity filter.
  std::vector<ItemIndex> defective_candidates;
  std::vector<ItemIndex> inhibitor_candidates;
  OpCounters counters;

  friend bool operator==(const DecodeResult& a, const DecodeResult& b) {
    return a.defectives == b.defectives && a.inhibitors == b.inhibitors;
  }
};

// Smallest element. Throws DomainError when `defectives` is empty.
ItemIndex ChooseReferenceDefective(std::span<const ItemIndex> defectives);

// Recovers D and H from the outcome v = (y, h, g) of a full scheme with at
// most e flips in total:
//  1. D is decoded from y alone.
//  2. Every block of h is inverted against every decoded defective; the
//     results form the inhibitor multiset, minus D itself.
//  3. Candidates seen fewer than e + 1 times are dropped.
//  4. A candidate x is dropped when rows of G shared by x and the reference
//     defective read positive (once under kPaperLiteral, e + 1 times under
//     kThreshold). A true inhibitor silences every such row.
// Throws DomainError when v has the wrong length or no defective survives.
DecodeResult GetInhibitors(const BitVector& v, const Scheme& scheme,
                           unsigned e, const DecodeConfig& config = {});

inline DecodeResult GetInhibitors(const BitVector& v, const Scheme& scheme,
                                  const DecodeConfig& config = {}) {
  return GetInhibitors(v, scheme, scheme.e, config);
}

// Defective-only decoding of a T outcome, packaged like GetInhibitors.
DecodeResult DecodeDefectiveScheme(const BitVector& y, const Scheme& scheme,
                                   unsigned e, const DecodeConfig& config = {});

// Dispatches on scheme.kind with e = scheme.e.
DecodeResult Decode(const BitVector& outcome, const Scheme& scheme,
                    const DecodeConfig& config = {});

}  // namespace nagti

#endif  // NAGTI_DECODE_INHIBITORS_H_
