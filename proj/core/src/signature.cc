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

#include "nagti/signature.h"

#include <bit>
#include <string>

#include "nagti/errors.h"

namespace nagti {

SignatureSpec::SignatureSpec(uint64_t n) : n_(n) {
  if (n < 2 || !std::has_single_bit(n) || n > (uint64_t{1} << 32)) {
    throw DomainError("item count must be a power of two in [2, 2^32], got " +
                      std::to_string(n));
  }
  log_n_ = static_cast<unsigned>(std::countr_zero(n));
  half_mask_ = (uint64_t{1} << log_n_) - 1;
}

unsigned SignatureColumn::Weight() const {
  return static_cast<unsigned>(std::popcount(bits));
}

SignatureColumn MakeSignatureColumn(ItemIndex j, const SignatureSpec& spec) {
  if (j < 1 || j > spec.n()) {
    throw DomainError("item " + std::to_string(j) + " outside [1, " +
                      std::to_string(spec.n()) + "]");
  }
  return SignatureColumn{j, spec.ColumnBits(j), spec.s()};
}

ItemIndex DecodeSignature(const BitVector& bits, const SignatureSpec& spec) {
  if (bits.size() != spec.s()) {
    throw DomainError("signature block must have " + std::to_string(spec.s()) +
                      " rows, got " + std::to_string(bits.size()));
  }
  return DecodeSignature(bits.Block(0, spec.s()), spec);
}

ItemIndex InvertSuppressedUnion(const BitVector& o, ItemIndex a,
                                const SignatureSpec& spec) {
  if (o.size() != spec.s()) {
    throw DomainError("signature block must have " + std::to_string(spec.s()) +
                      " rows, got " + std::to_string(o.size()));
  }
  if (a < 1 || a > spec.n()) throw DomainError("defective index out of range");
  return InvertSuppressedUnion(o.Block(0, spec.s()), a, spec);
}

}  // namespace nagti
