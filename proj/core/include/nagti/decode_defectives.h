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

#ifndef NAGTI_DECODE_DEFECTIVES_H_
#define NAGTI_DECODE_DEFECTIVES_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nagti/bit_vector.h"
#include "nagti/disjunct.h"
#include "nagti/instrumentation.h"
#include "nagti/signature.h"

namespace nagti {

// How candidates are sanitized after the vote.
//
// kPaperLiteral drops a candidate as soon as one of its rows reads 0 (for
// defectives) or one shared row reads 1 (for inhibitors). kThreshold only
// drops it when at least e + 1 such witnesses exist, which is what the
// error-counting argument supports; the literal test can remove a true
// defective that shares a block with an inhibitor, or a true inhibitor after
// a single flip.
enum class SanitizeRule { kPaperLiteral, kThreshold };

std::string SanitizeRuleName(SanitizeRule rule);
// Accepts "literal"/"paper_literal" and "threshold". Throws DomainError.
SanitizeRule ParseSanitizeRule(const std::string& name);

struct DecodeConfig {
  SanitizeRule rule = SanitizeRule::kThreshold;
  // Also require the second half of a voting block to complement the first.
  bool strict_block_check = false;
  // Skip all-zero blocks before inversion. Never changes the decoded sets.
  bool skip_zero_blocks = true;
};

// Item -> vote count, sorted by item.
class CandidateMultiset {
 public:
  CandidateMultiset() = default;
  // Builds the multiset from unsorted votes (one entry per vote).
  explicit CandidateMultiset(std::vector<ItemIndex> votes);

  const std::vector<std::pair<ItemIndex, uint64_t>>& entries() const {
    return entries_;
  }
  bool empty() const { return entries_.empty(); }
  uint64_t Count(ItemIndex j) const;
  uint64_t Total() const;
  // Items with at least `min_count` votes, ascending.
  std::vector<ItemIndex> AtLeast(uint64_t min_count) const;

 private:
  std::vector<std::pair<ItemIndex, uint64_t>> entries_;
};

// Counts votes for items in a reusable table, so that a decode costs time
// linear in the number of votes. Small universes get a direct-indexed array,
// larger ones an open-addressing hash table.
class VoteCounter {
 public:
  // Empties the table for items in [1, universe].
  void Reset(uint64_t universe);
  void Add(ItemIndex j) {
    if (dense_) {
      if (counts_[j]++ == 0) used_.push_back(j);
    } else {
      AddHashed(j);
    }
  }
  // Items with at least `min_count` votes, ascending.
  std::vector<ItemIndex> AtLeast(uint64_t min_count) const;

 private:
  void AddHashed(ItemIndex j);
  void Grow();
  ItemIndex Key(size_t slot) const { return dense_ ? slot : keys_[slot]; }

  bool dense_ = true;
  std::vector<ItemIndex> keys_;  // hashed mode; 0 marks an empty slot
  std::vector<uint64_t> counts_;
  std::vector<size_t> used_;  // occupied slots, in insertion order
  size_t mask_ = 0;
  unsigned shift_ = 64;
};

// Splits y into blocks of s = 2 log2 n rows. Every block of weight exactly
// log2 n votes for the item its first half spells. Throws DomainError when
// y.size() is not a multiple of s.
CandidateMultiset GetDefectivesStar(BitView y, const SignatureSpec& signature,
                                    const DecodeConfig& config = {},
                                    OpCounters* counters = nullptr);

// Recovers D from the outcome of T = M (x) S with at most e flips: keeps
// items with at least e + 1 votes, then sanitizes each one against its own
// column of T. `outer` is M. Returns the surviving items, ascending; the
// pre-sanitization set goes to `candidates` when given.
std::vector<ItemIndex> GetDefectivesWithoutInhibitors(
    BitView y, const SignatureSpec& signature, unsigned e,
    const DisjunctCode& outer, const DecodeConfig& config = {},
    OpCounters* counters = nullptr, std::vector<ItemIndex>* candidates = nullptr);

}  // namespace nagti

#endif  // NAGTI_DECODE_DEFECTIVES_H_
