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

#ifndef NAGTI_GALOIS_H_
#define NAGTI_GALOIS_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace nagti {

using FieldElement = uint32_t;

// GF(2^m) for 2 <= m <= 32. Elements are polynomials over GF(2) packed into
// the low m bits; addition is XOR and needs no member function.
//
// Each degree uses one fixed primitive reduction polynomial, so a given
// (m, element) always means the same thing. Log/antilog tables are built for
// m <= 16; larger fields multiply bit-serially.
class GaloisField {
 public:
  // Shared, immutable instance for degree m. Throws DomainError for m
  // outside [2, 32].
  static std::shared_ptr<const GaloisField> ForDegree(unsigned m);

  // Builds a field from an explicit reduction polynomial (bit m set). The
  // polynomial is checked for irreducibility when m <= 16.
  GaloisField(unsigned m, uint64_t reduction_poly);

  unsigned degree() const { return m_; }
  uint64_t order() const { return q_; }
  uint64_t reduction_poly() const { return poly_; }
  // Smallest element that generates the multiplicative group.
  FieldElement primitive() const { return primitive_; }
  bool has_tables() const { return !exp_.empty(); }

  // Range-checked; throw DomainError when an operand is >= order().
  FieldElement Mul(FieldElement a, FieldElement b) const;
  FieldElement Pow(FieldElement a, uint64_t k) const;
  FieldElement Inverse(FieldElement a) const;

  // Unchecked versions for inner loops.
  FieldElement MulUnchecked(FieldElement a, FieldElement b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables()) {
      uint32_t e = log_[a] + log_[b];
      if (e >= q_ - 1) e -= static_cast<uint32_t>(q_ - 1);
      return exp_[e];
    }
    return CarrylessMulMod(a, b);
  }
  FieldElement PowUnchecked(FieldElement a, uint64_t k) const;

  // The element g^k for the primitive element g.
  FieldElement PrimitivePower(uint64_t k) const;

 private:
  FieldElement CarrylessMulMod(FieldElement a, FieldElement b) const;
  void FindPrimitive();

  unsigned m_;
  uint64_t q_;
  uint64_t poly_;
  FieldElement primitive_ = 0;
  std::vector<FieldElement> exp_;
  std::vector<uint32_t> log_;
};

// Reduction polynomial used by ForDegree(m), including the x^m term.
uint64_t DefaultReductionPolynomial(unsigned m);

// Free-function spellings of the field operations.
inline FieldElement GfMul(FieldElement a, FieldElement b,
                          const GaloisField& field) {
  return field.Mul(a, b);
}
inline FieldElement GfPow(FieldElement a, uint64_t k,
                          const GaloisField& field) {
  return field.Pow(a, k);
}

// Parameters of an [n1, k1]_q Reed-Solomon code with n1 = q - 1.
struct RsParams {
  std::shared_ptr<const GaloisField> field;
  uint64_t n1 = 0;
  uint64_t k1 = 0;
  uint64_t lambda_min = 0;  // n1 - k1 + 1

  static RsParams Make(std::shared_ptr<const GaloisField> field, uint64_t k1);
};

// Evaluation-map encoder. Codeword position i (0-based) is the message
// polynomial sum_j message[j] * x^j evaluated at x = g^i, g the field's
// primitive element, for i = 0 .. q-2.
class ReedSolomonCode {
 public:
  explicit ReedSolomonCode(RsParams params);

  const RsParams& params() const { return params_; }
  const GaloisField& field() const { return *params_.field; }

  // Throws DomainError when message.size() != k1 or a symbol is out of range.
  std::vector<FieldElement> Evaluate(std::span<const FieldElement> message) const;
  // Writes n1 symbols into `codeword`; no range checks.
  void EvaluateInto(std::span<const FieldElement> message,
                    std::span<FieldElement> codeword) const;

 private:
  RsParams params_;
};

}  // namespace nagti

#endif  // NAGTI_GALOIS_H_
