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

#ifndef NAGTI_SIGNATURE_H_
#define NAGTI_SIGNATURE_H_

#include <cstdint>

#include "nagti/bit_vector.h"

namespace nagti {

// Items are numbered from 1.
using ItemIndex = uint64_t;

// The s x n signature matrix, s = 2 log2 n. Column j is the log2(n)-bit
// big-endian binary of j - 1 stacked on its complement, so every column has
// weight log2 n and any single column identifies its item.
//
// A block of s rows is carried in the low s bits of a uint64_t with row 0 in
// the most significant of those bits, matching BitVector::Block().
class SignatureSpec {
 public:
  // n must be a power of two in [2, 2^32]; throws DomainError otherwise.
  SignatureSpec() : SignatureSpec(2) {}
  explicit SignatureSpec(uint64_t n);

  uint64_t n() const { return n_; }
  unsigned log_n() const { return log_n_; }
  unsigned s() const { return 2 * log_n_; }
  uint64_t half_mask() const { return half_mask_; }
  uint64_t block_mask() const { return (half_mask_ << log_n_) | half_mask_; }

  // No range check.
  uint64_t ColumnBits(ItemIndex j) const {
    const uint64_t code = j - 1;
    return (code << log_n_) | (~code & half_mask_);
  }

  friend bool operator==(const SignatureSpec&, const SignatureSpec&) = default;

 private:
  uint64_t n_;
  unsigned log_n_;
  uint64_t half_mask_;
};

struct SignatureColumn {
  ItemIndex item = 0;
  uint64_t bits = 0;  // s-bit block, row 0 most significant
  unsigned s = 0;

  bool Row(unsigned l) const { return (bits >> (s - 1 - l)) & 1u; }
  unsigned Weight() const;
};

// Throws DomainError when j is outside [1, n].
SignatureColumn MakeSignatureColumn(ItemIndex j, const SignatureSpec& spec);

// Reads the item index off the first half of a block. Only the first half is
// consulted; callers filter on weight or shape themselves.
inline ItemIndex DecodeSignature(uint64_t block, const SignatureSpec& spec) {
  return (block >> spec.log_n()) + 1;
}

// True iff the second half of `block` is the complement of the first half.
inline bool HasComplementaryHalves(uint64_t block, const SignatureSpec& spec) {
  return ((block >> spec.log_n()) ^ (block & spec.half_mask())) ==
         spec.half_mask();
}

// Recovers the inhibitor b from o = S_a AND NOT S_b, given the defective a.
// Rows where S_a is 1 reveal S_b directly; the complementary-halves
// structure fills in the rest. Total on every input: a block that is not of
// the assumed form yields some index in [1, n] that callers must filter.
inline ItemIndex InvertSuppressedUnion(uint64_t o, ItemIndex a,
                                       const SignatureSpec& spec) {
  const uint64_t mask = spec.half_mask();
  const uint64_t a_first = (a - 1) & mask;
  const uint64_t o_first = (o >> spec.log_n()) & mask;
  const uint64_t o_second = o & mask;
  // Where a's first half is 1, b's first-half bit is 1 - o. Elsewhere a's
  // second half is 1, so b's second-half bit is 1 - o there and b's
  // first-half bit is its complement, o itself.
  return (((a_first & ~o_first) | (~a_first & o_second)) & mask) + 1;
}

// Bit-vector spellings; throw DomainError unless bits.size() == s (and, for
// the inversion, a is in [1, n]).
ItemIndex DecodeSignature(const BitVector& bits, const SignatureSpec& spec);
ItemIndex InvertSuppressedUnion(const BitVector& o, ItemIndex a,
                                const SignatureSpec& spec);

}  // namespace nagti

#endif  // NAGTI_SIGNATURE_H_
