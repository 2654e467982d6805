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

#include "nagti/galois.h"

#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <string>

#include "nagti/errors.h"

namespace nagti {
namespace {

// Primitive polynomials over GF(2), one per degree, x^m term included.
constexpr std::array<uint64_t, 33> kReductionPolys = {
    0,           0,           0x7,         0xB,         0x13,
    0x25,        0x43,        0x83,        0x11D,       0x211,
    0x409,       0x805,       0x1053,      0x201B,      0x4443,
    0x8003,      0x1100B,     0x20009,     0x40081,     0x80027,
    0x100009,    0x200005,    0x400003,    0x800021,    0x1000087,
    0x2000009,   0x4000047,   0x8000027,   0x10000009,  0x20000005,
    0x40800007,  0x80000009,  0x100400007,
};

constexpr unsigned kMaxTableDegree = 16;

int PolyDegree(uint64_t p) { return 63 - std::countl_zero(p); }

uint64_t PolyMod(uint64_t a, uint64_t b) {
  const int db = PolyDegree(b);
  for (int da = PolyDegree(a); a != 0 && da >= db; da = PolyDegree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

bool IsIrreducible(uint64_t poly) {
  const int m = PolyDegree(poly);
  for (int d = 1; d <= m / 2; ++d) {
    for (uint64_t divisor = uint64_t{1} << d; divisor < (uint64_t{2} << d);
         ++divisor) {
      if (PolyMod(poly, divisor) == 0) return false;
    }
  }
  return true;
}

std::vector<uint64_t> PrimeFactors(uint64_t x) {
  std::vector<uint64_t> out;
  for (uint64_t p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    out.push_back(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) out.push_back(x);
  return out;
}

}  // namespace

uint64_t DefaultReductionPolynomial(unsigned m) {
  if (m < 2 || m > 32) {
    throw DomainError("field degree must be in [2, 32], got " + std::to_string(m));
  }
  return kReductionPolys[m];
}

std::shared_ptr<const GaloisField> GaloisField::ForDegree(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const GaloisField>> cache;
  const uint64_t poly = DefaultReductionPolynomial(m);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_shared<const GaloisField>(m, poly);
  return slot;
}

GaloisField::GaloisField(unsigned m, uint64_t reduction_poly)
    : m_(m), q_(uint64_t{1} << m), poly_(reduction_poly) {
  if (m < 2 || m > 32) {
    throw DomainError("field degree must be in [2, 32], got " + std::to_string(m));
  }
  if (PolyDegree(reduction_poly) != static_cast<int>(m)) {
    throw DomainError("reduction polynomial must have degree " + std::to_string(m));
  }
  if (m <= kMaxTableDegree && !IsIrreducible(reduction_poly)) {
    throw DomainError("reduction polynomial is reducible");
  }
  FindPrimitive();
  if (m <= kMaxTableDegree) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    FieldElement x = 1;
    for (uint64_t k = 0; k < q_ - 1; ++k) {
      exp_[k] = x;
      log_[x] = static_cast<uint32_t>(k);
      x = CarrylessMulMod(x, primitive_);
    }
  }
}

FieldElement GaloisField::CarrylessMulMod(FieldElement a, FieldElement b) const {
  uint64_t acc = 0;
  uint64_t shifted = a;
  const uint64_t top = q_;
  while (b != 0) {
    if (b & 1u) acc ^= shifted;
    b >>= 1;
    shifted <<= 1;
    if (shifted & top) shifted ^= poly_;
  }
  return static_cast<FieldElement>(acc);
}

void GaloisField::FindPrimitive() {
  const uint64_t group = q_ - 1;
  const auto factors = PrimeFactors(group);
  for (uint64_t g = 2; g < q_; ++g) {
    const auto candidate = static_cast<FieldElement>(g);
    bool generates = true;
    for (uint64_t p : factors) {
      if (PowUnchecked(candidate, group / p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) {
      primitive_ = candidate;
      return;
    }
  }
  throw InternalError("no primitive element found; reduction polynomial is not irreducible");
}

FieldElement GaloisField::PowUnchecked(FieldElement a, uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  if (has_tables()) {
    const uint64_t e = (static_cast<uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
    return exp_[e];
  }
  FieldElement result = 1;
  FieldElement base = a;
  while (k != 0) {
    if (k & 1u) result = CarrylessMulMod(result, base);
    base = CarrylessMulMod(base, base);
    k >>= 1;
  }
  return result;
}

FieldElement GaloisField::Mul(FieldElement a, FieldElement b) const {
  if (a >= q_ || b >= q_) throw DomainError("field element out of range");
  return MulUnchecked(a, b);
}

FieldElement GaloisField::Pow(FieldElement a, uint64_t k) const {
  if (a >= q_) throw DomainError("field element out of range");
  return PowUnchecked(a, k);
}

FieldElement GaloisField::Inverse(FieldElement a) const {
  if (a == 0 || a >= q_) throw DomainError("no inverse for this element");
  return PowUnchecked(a, q_ - 2);
}

FieldElement GaloisField::PrimitivePower(uint64_t k) const {
  k %= q_ - 1;
  return has_tables() ? exp_[k] : PowUnchecked(primitive_, k);
}

RsParams RsParams::Make(std::shared_ptr<const GaloisField> field, uint64_t k1) {
  if (!field) throw DomainError("RsParams needs a field");
  const uint64_t n1 = field->order() - 1;
  if (k1 < 1 || k1 > n1) {
    throw DomainError("RS dimension k1 must be in [1, " + std::to_string(n1) + "]");
  }
  return RsParams{std::move(field), n1, k1, n1 - k1 + 1};
}

ReedSolomonCode::ReedSolomonCode(RsParams params) : params_(std::move(params)) {
  if (!params_.field || params_.n1 != params_.field->order() - 1 ||
      params_.k1 < 1 || params_.k1 > params_.n1 ||
      params_.lambda_min != params_.n1 - params_.k1 + 1) {
    throw DomainError("inconsistent Reed-Solomon parameters");
  }
}

std::vector<FieldElement> ReedSolomonCode::Evaluate(
    std::span<const FieldElement> message) const {
  if (message.size() != params_.k1) {
    throw DomainError("message length " + std::to_string(message.size()) +
                      " != k1 = " + std::to_string(params_.k1));
  }
  for (FieldElement s : message) {
    if (s >= field().order()) throw DomainError("message symbol out of range");
  }
  std::vector<FieldElement> codeword(params_.n1);
  EvaluateInto(message, codeword);
  return codeword;
}

void ReedSolomonCode::EvaluateInto(std::span<const FieldElement> message,
                                   std::span<FieldElement> codeword) const {
  const GaloisField& f = field();
  for (uint64_t i = 0; i < params_.n1; ++i) {
    const FieldElement x = f.PrimitivePower(i);
    FieldElement acc = 0;
    for (size_t j = message.size(); j-- > 0;) {
      acc = f.MulUnchecked(acc, x) ^ message[j];
    }
    codeword[i] = acc;
  }
}

}  // namespace nagti
