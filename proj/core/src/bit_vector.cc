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

#include "nagti/bit_vector.h"

#include <algorithm>
#include <bit>
#include <string>

#include "nagti/errors.h"

namespace nagti {
namespace {

constexpr uint64_t WordCount(uint64_t bits) { return (bits + 63) / 64; }

// Mask selecting the valid (high) bits of the last word.
uint64_t TailMask(uint64_t size) {
  const unsigned used = size & 63;
  return used == 0 ? ~uint64_t{0} : ~uint64_t{0} << (64 - used);
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitVector::BitVector(uint64_t size) : size_(size), words_(WordCount(size), 0) {}

void BitVector::Set(uint64_t i, bool value) {
  const uint64_t mask = uint64_t{1} << (63 - (i & 63));
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

uint64_t BitVector::Count() const {
  uint64_t total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool BitVector::None() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](uint64_t w) { return w == 0; });
}

void BitVector::OrBlock(uint64_t offset, unsigned width, uint64_t bits) {
  const uint64_t w = offset >> 6;
  const unsigned b = offset & 63;
  const uint64_t aligned = bits << (64 - width);
  words_[w] |= aligned >> b;
  if (b + width > 64) words_[w + 1] |= aligned << (64 - b);
}

std::vector<uint64_t> BitVector::SetBits() const {
  std::vector<uint64_t> out;
  for (uint64_t i = NextSetBit(0); i < size_; i = NextSetBit(i + 1)) {
    out.push_back(i);
  }
  return out;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  if (other.size_ != size_) throw DomainError("BitVector size mismatch");
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.size_ != size_) throw DomainError("BitVector size mismatch");
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw DomainError("BitVector size mismatch");
  for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::AndNot(const BitVector& other) {
  if (other.size_ != size_) throw DomainError("BitVector size mismatch");
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

BitVector BitVector::Slice(uint64_t offset, uint64_t length) const {
  if (offset + length > size_) throw DomainError("BitVector slice out of range");
  BitVector out(length);
  uint64_t pos = 0;
  while (pos < length) {
    const unsigned width = static_cast<unsigned>(std::min<uint64_t>(64, length - pos));
    out.OrBlock(pos, width, Block(offset + pos, width));
    pos += width;
  }
  return out;
}

void BitVector::Assign(uint64_t offset, const BitVector& other) {
  if (offset + other.size_ > size_) {
    throw DomainError("BitVector assign out of range");
  }
  for (uint64_t i = 0; i < other.size_; ++i) Set(offset + i, other.Test(i));
}

std::string BitVector::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const uint64_t digits = (size_ + 3) / 4;
  std::string out;
  out.reserve(digits);
  for (uint64_t k = 0; k < digits; ++k) {
    const uint64_t word = words_[k / 16];
    out.push_back(kDigits[(word >> (60 - 4 * (k % 16))) & 0xf]);
  }
  return out;
}

BitVector BitVector::FromHex(std::string_view hex, uint64_t size) {
  if (hex.size() != (size + 3) / 4) {
    throw DomainError("hex string has " + std::to_string(hex.size()) +
                      " digits, expected " + std::to_string((size + 3) / 4));
  }
  BitVector out(size);
  for (uint64_t k = 0; k < hex.size(); ++k) {
    const int v = HexValue(hex[k]);
    if (v < 0) throw DomainError(std::string("bad hex digit '") + hex[k] + "'");
    out.words_[k / 16] |= static_cast<uint64_t>(v) << (60 - 4 * (k % 16));
  }
  if (!out.words_.empty() && (out.words_.back() & ~TailMask(size)) != 0) {
    throw DomainError("hex string sets padding bits past the declared length");
  }
  return out;
}

uint64_t HammingDistance(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw DomainError("BitVector size mismatch");
  const auto wa = a.words();
  const auto wb = b.words();
  uint64_t total = 0;
  for (size_t i = 0; i < wa.size(); ++i) total += std::popcount(wa[i] ^ wb[i]);
  return total;
}

BitView::BitView(const BitVector& bits, uint64_t offset, uint64_t size)
    : bits_(&bits), offset_(offset), size_(size) {
  if (offset + size > bits.size()) throw DomainError("BitView out of range");
}

}  // namespace nagti
