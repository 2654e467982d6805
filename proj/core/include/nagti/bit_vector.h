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

#ifndef NAGTI_BIT_VECTOR_H_
#define NAGTI_BIT_VECTOR_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nagti {

// Packed bit vector. Bit i is stored most-significant-first: bit 0 is the top
// bit of word 0. That makes an s-bit window read with Block() come out with
// its first row in the most significant position, and makes the hex form
// read left to right in row order. Padding bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(uint64_t size);

  uint64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool Test(uint64_t i) const {
    return (words_[i >> 6] >> (63 - (i & 63))) & 1u;
  }
  void Set(uint64_t i, bool value = true);
  void Flip(uint64_t i) { words_[i >> 6] ^= uint64_t{1} << (63 - (i & 63)); }

  uint64_t Count() const;
  bool None() const;

  // Returns bits [offset, offset + width) packed into the low `width` bits of
  // the result, bit `offset` most significant. Requires 1 <= width <= 64.
  uint64_t Block(uint64_t offset, unsigned width) const {
    const uint64_t w = offset >> 6;
    const unsigned b = offset & 63;
    uint64_t hi = words_[w] << b;
    if (b + width > 64) hi |= words_[w + 1] >> (64 - b);
    return hi >> (64 - width);
  }
  // ORs a `width`-bit window (same layout as Block) into [offset, offset+width).
  void OrBlock(uint64_t offset, unsigned width, uint64_t bits);

  // First set bit at index >= from, or size() if there is none.
  uint64_t NextSetBit(uint64_t from) const {
    if (from >= size_) return size_;
    uint64_t w = from >> 6;
    uint64_t word = words_[w] & (~uint64_t{0} >> (from & 63));
    while (word == 0) {
      if (++w == words_.size()) return size_;
      word = words_[w];
    }
    return std::min<uint64_t>(w * 64 + std::countl_zero(word), size_);
  }
  std::vector<uint64_t> SetBits() const;

  BitVector& operator|=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator^=(const BitVector& other);
  // this &= ~other
  BitVector& AndNot(const BitVector& other);

  // Copies [offset, offset + length) into a new vector.
  BitVector Slice(uint64_t offset, uint64_t length) const;
  // Overwrites [offset, offset + other.size()) with `other`.
  void Assign(uint64_t offset, const BitVector& other);

  std::span<const uint64_t> words() const { return words_; }

  // Lowercase hex, four rows per digit, row 0 in the top bit of the first
  // digit. The final digit is zero padded on the right.
  std::string ToHex() const;
  // Throws DomainError on a bad digit, a wrong digit count or nonzero padding.
  static BitVector FromHex(std::string_view hex, uint64_t size);

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  uint64_t size_ = 0;
  std::vector<uint64_t> words_;
};

uint64_t HammingDistance(const BitVector& a, const BitVector& b);

// Read-only window [offset, offset + size) of a BitVector. Used to hand the
// y, h and g parts of a stacked outcome to the decoders without copying.
class BitView {
 public:
  BitView(const BitVector& bits)  // NOLINT: implicit view of a whole vector
      : bits_(&bits), offset_(0), size_(bits.size()) {}
  BitView(const BitVector& bits, uint64_t offset, uint64_t size);

  uint64_t size() const { return size_; }
  bool Test(uint64_t i) const { return bits_->Test(offset_ + i); }
  uint64_t Block(uint64_t offset, unsigned width) const {
    return bits_->Block(offset_ + offset, width);
  }
  uint64_t NextSetBit(uint64_t from) const {
    if (from >= size_) return size_;
    const uint64_t next = bits_->NextSetBit(offset_ + from);
    return std::min(next - offset_, size_);
  }

 private:
  const BitVector* bits_;
  uint64_t offset_;
  uint64_t size_;
};

}  // namespace nagti

#endif  // NAGTI_BIT_VECTOR_H_
