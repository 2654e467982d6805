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

#include "nagti/decode_defectives.h"

#include <algorithm>
#include <bit>
#include <string>

#include "nagti/errors.h"

namespace nagti {
namespace {

void CheckBlockLength(uint64_t size, unsigned s) {
  if (size % s != 0) {
    throw DomainError("outcome length " + std::to_string(size) +
                      " is not a multiple of the block size " + std::to_string(s));
  }
}

}  // namespace

std::string SanitizeRuleName(SanitizeRule rule) {
  return rule == SanitizeRule::kPaperLiteral ? "paper_literal" : "threshold";
}

SanitizeRule ParseSanitizeRule(const std::string& name) {
  if (name == "literal" || name == "paper_literal") return SanitizeRule::kPaperLiteral;
  if (name == "threshold") return SanitizeRule::kThreshold;
  throw DomainError("unknown rule '" + name + "' (expected literal or threshold)");
}

CandidateMultiset::CandidateMultiset(std::vector<ItemIndex> votes) {
  std::sort(votes.begin(), votes.end());
  for (ItemIndex j : votes) {
    if (!entries_.empty() && entries_.back().first == j) {
      ++entries_.back().second;
    } else {
      entries_.emplace_back(j, 1);
    }
  }
}

uint64_t CandidateMultiset::Count(ItemIndex j) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), j,
      [](const std::pair<ItemIndex, uint64_t>& a, ItemIndex b) { return a.first < b; });
  return it != entries_.end() && it->first == j ? it->second : 0;
}

uint64_t CandidateMultiset::Total() const {
  uint64_t total = 0;
  for (const auto& entry : entries_) total += entry.second;
  return total;
}

std::vector<ItemIndex> CandidateMultiset::AtLeast(uint64_t min_count) const {
  std::vector<ItemIndex> out;
  for (const auto& [item, count] : entries_) {
    if (count >= min_count) out.push_back(item);
  }
  return out;
}

namespace {
constexpr uint64_t kDenseUniverse = uint64_t{1} << 16;
constexpr size_t kInitialSlots = 1024;
}  // namespace

void VoteCounter::Reset(uint64_t universe) {
  for (size_t slot : used_) {
    counts_[slot] = 0;
    if (!dense_) keys_[slot] = 0;
  }
  used_.clear();
  const bool dense = universe <= kDenseUniverse;
  if (dense != dense_ || counts_.empty()) {
    dense_ = dense;
    keys_.assign(dense ? 0 : kInitialSlots, 0);
    counts_.assign(dense ? kDenseUniverse + 1 : kInitialSlots, 0);
  }
  if (!dense_) {
    mask_ = keys_.size() - 1;
    shift_ = 64 - static_cast<unsigned>(std::countr_zero(keys_.size()));
  }
}

void VoteCounter::AddHashed(ItemIndex j) {
  if (2 * (used_.size() + 1) > keys_.size()) Grow();
  size_t slot = (j * 0x9E3779B97F4A7C15ull) >> shift_;
  while (keys_[slot] != 0 && keys_[slot] != j) slot = (slot + 1) & mask_;
  if (keys_[slot] == 0) {
    keys_[slot] = j;
    used_.push_back(slot);
  }
  ++counts_[slot];
}

void VoteCounter::Grow() {
  std::vector<std::pair<ItemIndex, uint64_t>> entries;
  for (size_t slot : used_) entries.emplace_back(keys_[slot], counts_[slot]);
  const size_t capacity = 2 * keys_.size();
  keys_.assign(capacity, 0);
  counts_.assign(capacity, 0);
  used_.clear();
  mask_ = capacity - 1;
  shift_ = 64 - static_cast<unsigned>(std::countr_zero(capacity));
  for (const auto& [item, count] : entries) {
    size_t slot = (item * 0x9E3779B97F4A7C15ull) >> shift_;
    while (keys_[slot] != 0) slot = (slot + 1) & mask_;
    keys_[slot] = item;
    counts_[slot] = count;
    used_.push_back(slot);
  }
}

std::vector<ItemIndex> VoteCounter::AtLeast(uint64_t min_count) const {
  std::vector<ItemIndex> out;
  for (size_t slot : used_) {
    if (counts_[slot] >= min_count) out.push_back(Key(slot));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CandidateMultiset GetDefectivesStar(BitView y, const SignatureSpec& signature,
                                    const DecodeConfig& config,
                                    OpCounters* counters) {
  const unsigned s = signature.s();
  CheckBlockLength(y.size(), s);
  const unsigned log_n = signature.log_n();
  std::vector<ItemIndex> votes;
  uint64_t examined = 0;
  // A voting block has weight log n >= 1, so zero blocks and zero word-sized
  // windows of blocks are passed over.
  const uint64_t block_mask = s == 64 ? ~uint64_t{0} : (uint64_t{1} << s) - 1;
  const uint64_t stride = (64 / s) * s;
  for (uint64_t offset = 0; offset < y.size(); offset += stride) {
    const auto width = static_cast<unsigned>(std::min(stride, y.size() - offset));
    const uint64_t window = y.Block(offset, width);
    if (window == 0) continue;
    for (unsigned shift = width; shift > 0;) {
      shift -= s;
      const uint64_t block = (window >> shift) & block_mask;
      if (block == 0) continue;
      ++examined;
      if (static_cast<unsigned>(std::popcount(block)) == log_n &&
          (!config.strict_block_check || HasComplementaryHalves(block, signature))) {
        votes.push_back(DecodeSignature(block, signature));
      }
    }
  }
  if (counters != nullptr) counters->blocks_examined += examined;
  return CandidateMultiset(std::move(votes));
}

std::vector<ItemIndex> GetDefectivesWithoutInhibitors(
    BitView y, const SignatureSpec& signature, unsigned e,
    const DisjunctCode& outer, const DecodeConfig& config,
    OpCounters* counters, std::vector<ItemIndex>* candidates) {
  const unsigned s = signature.s();
  if (y.size() != outer.rows() * s) {
    throw DomainError("outcome length " + std::to_string(y.size()) +
                      " does not match m * s = " + std::to_string(outer.rows() * s));
  }
  const std::vector<ItemIndex> s0 =
      GetDefectivesStar(y, signature, config, counters).AtLeast(e + 1);

  if (candidates != nullptr) *candidates = s0;
  std::vector<ItemIndex> kept;
  std::vector<uint64_t> support;
  for (ItemIndex x : s0) {
    outer.Support(x, support);
    const uint64_t sx = signature.ColumnBits(x);
    uint64_t witnesses = 0;
    for (uint64_t block_index : support) {
      const uint64_t block = y.Block(block_index * s, s);
      if (config.rule == SanitizeRule::kPaperLiteral) {
        // Some row of T_x reads 0.
        if ((block & sx) != sx) ++witnesses;
      } else if ((block & sx) == 0) {
        ++witnesses;
      }
    }
    if (counters != nullptr) {
      ++counters->column_generations;
      ++counters->candidates_checked;
      counters->blocks_examined += support.size();
    }
    const uint64_t limit = config.rule == SanitizeRule::kPaperLiteral ? 1 : e + 1;
    if (witnesses < limit) kept.push_back(x);
  }
  return kept;
}

}  // namespace nagti
