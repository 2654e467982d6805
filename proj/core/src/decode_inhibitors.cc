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

#include "nagti/decode_inhibitors.h"

#include <algorithm>
#include <string>

#include "nagti/errors.h"

namespace nagti {

ItemIndex ChooseReferenceDefective(std::span<const ItemIndex> defectives) {
  if (defectives.empty()) throw DomainError("no defective to use as reference");
  return *std::min_element(defectives.begin(), defectives.end());
}

DecodeResult DecodeDefectiveScheme(const BitVector& y, const Scheme& scheme,
                                   unsigned e, const DecodeConfig& config) {
  if (y.size() != scheme.t()) {
    throw DomainError("outcome has " + std::to_string(y.size()) + " rows, expected " +
                      std::to_string(scheme.t()));
  }
  DecodeResult result;
  result.defectives = GetDefectivesWithoutInhibitors(y, scheme.signature, e, *scheme.outer,
                                                     config, &result.counters,
                                                     &result.defective_candidates);
  return result;
}

DecodeResult GetInhibitors(const BitVector& v, const Scheme& scheme, unsigned e,
                           const DecodeConfig& config) {
  if (scheme.kind != SchemeKind::kFull) {
    throw DomainError("inhibitor decoding needs the full scheme");
  }
  if (v.size() != scheme.rows()) {
    throw DomainError("outcome has " + std::to_string(v.size()) + " rows, expected " +
                      std::to_string(scheme.rows()));
  }
  const SignatureSpec& signature = scheme.signature;
  const unsigned s = signature.s();
  const uint64_t t = scheme.t();
  const uint64_t h_rows = scheme.h_rows();
  const BitView y(v, 0, t);
  const BitView h(v, t, h_rows);
  const BitView g(v, t + h_rows, scheme.g());

  DecodeResult result;
  OpCounters& counters = result.counters;
  result.defectives = GetDefectivesWithoutInhibitors(y, signature, e, *scheme.outer,
                                                     config, &counters,
                                                     &result.defective_candidates);
  if (result.defectives.empty()) throw DomainError("no defective item decoded");
  const std::vector<ItemIndex>& defectives = result.defectives;

  thread_local VoteCounter votes;
  votes.Reset(signature.n());
  // Blocks are read a word-sized window at a time. An all-zero block inverts
  // to the defective itself, which the membership filter discards, so
  // skipping zero blocks and windows changes nothing.
  const bool skip = config.skip_zero_blocks;
  const uint64_t block_mask = s == 64 ? ~uint64_t{0} : (uint64_t{1} << s) - 1;
  const uint64_t stride = (64 / s) * s;
  uint64_t inverted_blocks = 0;
  for (uint64_t offset = 0; offset < h_rows; offset += stride) {
    const auto width = static_cast<unsigned>(std::min(stride, h_rows - offset));
    const uint64_t window = h.Block(offset, width);
    if (window == 0 && skip) continue;
    for (unsigned shift = width; shift > 0;) {
      shift -= s;
      const uint64_t block = (window >> shift) & block_mask;
      if (block == 0 && skip) continue;
      ++inverted_blocks;
      for (ItemIndex x : defectives) {
        const ItemIndex b = InvertSuppressedUnion(block, x, signature);
        // Inhibitors are never defective.
        bool defective = false;
        for (ItemIndex d : defectives) defective |= d == b;
        if (!defective) votes.Add(b);
      }
    }
  }
  counters.blocks_examined += inverted_blocks;
  counters.inversions += inverted_blocks * defectives.size();
  const std::vector<ItemIndex> candidates = votes.AtLeast(e + 1);
  result.inhibitor_candidates = candidates;
  if (candidates.empty()) return result;

  const DisjunctCode& pair = *scheme.pair;
  const ItemIndex reference = ChooseReferenceDefective(defectives);
  std::vector<uint64_t> reference_rows;
  pair.Support(reference, reference_rows);
  ++counters.column_generations;

  const uint64_t limit = config.rule == SanitizeRule::kPaperLiteral ? 1 : e + 1;
  std::vector<uint64_t> rows;
  for (ItemIndex x : candidates) {
    pair.Support(x, rows);
    ++counters.column_generations;
    ++counters.candidates_checked;
    uint64_t positive = 0;
    auto a = reference_rows.begin();
    auto b = rows.begin();
    while (a != reference_rows.end() && b != rows.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        if (g.Test(*a)) ++positive;
        ++a;
        ++b;
      }
    }
    if (positive < limit) result.inhibitors.push_back(x);
  }
  return result;
}

DecodeResult Decode(const BitVector& outcome, const Scheme& scheme,
                    const DecodeConfig& config) {
  if (scheme.kind == SchemeKind::kFull) return GetInhibitors(outcome, scheme, config);
  return DecodeDefectiveScheme(outcome, scheme, scheme.e, config);
}

}  // namespace nagti
