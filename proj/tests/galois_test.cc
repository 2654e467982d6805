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

#include <cstdint>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "nagti/errors.h"

namespace nagti {
namespace {

// Shift-and-add multiply, reducing after every shift.
uint64_t SlowMul(uint64_t a, uint64_t b, unsigned m, uint64_t poly) {
  uint64_t acc = 0;
  for (unsigned i = 0; i < m; ++i) {
    if ((b >> i) & 1) acc ^= a;
    a <<= 1;
    if ((a >> m) & 1) a ^= poly;
  }
  return acc;
}

int Degree(uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

// Remainder of GF(2)[x] long division.
uint64_t PolyMod(uint64_t a, uint64_t b) {
  const int db = Degree(b);
  for (int da = Degree(a); da >= db; da = Degree(a)) a ^= b << (da - db);
  return a;
}

// Carry-less product of two polynomials, no reduction.
uint64_t PolyMul(uint64_t a, uint64_t b) {
  uint64_t acc = 0;
  for (int i = 0; b >> i; ++i)
    if ((b >> i) & 1) acc ^= a << i;
  return acc;
}

bool IrreducibleByTrialDivision(uint64_t p) {
  const int m = Degree(p);
  for (uint64_t f = 2; Degree(f) <= m / 2; ++f)
    if (PolyMod(p, f) == 0) return false;
  return true;
}

TEST(GaloisField, SmallExamples) {
  GaloisField gf8(3, 0b1011);
  EXPECT_EQ(gf8.Mul(0, 5), 0u);
  EXPECT_EQ(gf8.Mul(1, 6), 6u);
  EXPECT_EQ(gf8.Mul(3, 5), 4u);
  EXPECT_EQ(gf8.Pow(2, 3), 3u);
  EXPECT_EQ(GfMul(3, 5, gf8), PolyMod(PolyMul(3, 5), 0b1011));
  EXPECT_EQ(GfPow(2, 3, gf8), PolyMod(PolyMul(PolyMul(2, 2), 2), 0b1011));
}

TEST(GaloisField, MultiplicationTableMatchesLongDivision) {
  for (unsigned m = 2; m <= 8; ++m) {
    const auto field = GaloisField::ForDegree(m);
    const uint64_t poly = field->reduction_poly();
    for (uint64_t a = 0; a < field->order(); ++a)
      for (uint64_t b = 0; b < field->order(); ++b) {
        const uint64_t expected = PolyMod(PolyMul(a, b), poly);
        ASSERT_EQ(field->Mul(a, b), expected) << "m=" << m << " a=" << a << " b=" << b;
        ASSERT_EQ(SlowMul(a, b, m, poly), expected);
      }
  }
}

TEST(GaloisField, LargeFieldsMatchShiftAndAdd) {
  for (unsigned m : {12u, 16u, 17u, 24u, 31u, 32u}) {
    const auto field = GaloisField::ForDegree(m);
    const uint64_t poly = field->reduction_poly();
    uint64_t x = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < 2000; ++i) {
      x ^= x << 13, x ^= x >> 7, x ^= x << 17;
      const FieldElement a = static_cast<FieldElement>(x & (field->order() - 1));
      const FieldElement b = static_cast<FieldElement>((x >> 32) & (field->order() - 1));
      ASSERT_EQ(field->Mul(a, b), SlowMul(a, b, m, poly)) << "m=" << m;
    }
  }
}

TEST(GaloisField, ReductionPolynomialsAreIrreducible) {
  for (unsigned m = 2; m <= 32; ++m) {
    const uint64_t p = DefaultReductionPolynomial(m);
    EXPECT_EQ(Degree(p), static_cast<int>(m));
    EXPECT_TRUE(IrreducibleByTrialDivision(p)) << "m=" << m;
  }
}

TEST(GaloisField, RejectsReduciblePolynomial) {
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2
  EXPECT_THROW(GaloisField(4, 0b10101), DomainError);
}

TEST(GaloisField, NonzeroElementsFormCyclicGroup) {
  for (unsigned m = 2; m <= 8; ++m) {
    const auto field = GaloisField::ForDegree(m);
    const uint64_t q = field->order();
    for (FieldElement a = 1; a < q; ++a) {
      EXPECT_EQ(field->Pow(a, q - 1), 1u);
      EXPECT_EQ(field->Mul(a, field->Inverse(a)), 1u);
      EXPECT_EQ(field->Pow(a, 0), 1u);
    }
    // Smallest generator, found by listing powers.
    FieldElement generator = 0;
    for (FieldElement a = 2; a < q && generator == 0; ++a) {
      std::set<uint64_t> seen;
      uint64_t x = 1;
      for (uint64_t k = 0; k < q - 1; ++k) seen.insert(x = SlowMul(x, a, m, field->reduction_poly()));
      if (seen.size() == q - 1) generator = a;
    }
    EXPECT_EQ(field->primitive(), generator) << "m=" << m;
  }
}

TEST(GaloisField, RangeChecks) {
  const auto field = GaloisField::ForDegree(3);
  EXPECT_THROW(field->Mul(8, 1), DomainError);
  EXPECT_THROW(field->Pow(9, 2), DomainError);
  EXPECT_THROW(field->Inverse(0), DomainError);
  EXPECT_THROW(GaloisField::ForDegree(1), DomainError);
  EXPECT_THROW(GaloisField::ForDegree(33), DomainError);
}

// Horner evaluation with the shift-and-add multiply.
std::vector<uint64_t> SlowCodeword(const std::vector<FieldElement>& msg, const GaloisField& f) {
  std::vector<uint64_t> out;
  uint64_t point = 1;
  for (uint64_t i = 0; i + 1 < f.order(); ++i) {
    uint64_t acc = 0;
    for (size_t j = msg.size(); j-- > 0;)
      acc = SlowMul(acc, point, f.degree(), f.reduction_poly()) ^ msg[j];
    out.push_back(acc);
    point = SlowMul(point, f.primitive(), f.degree(), f.reduction_poly());
  }
  return out;
}

TEST(ReedSolomon, Examples) {
  const ReedSolomonCode rs(RsParams::Make(GaloisField::ForDegree(3), 2));
  EXPECT_EQ(rs.params().n1, 7u);
  EXPECT_EQ(rs.params().lambda_min, 6u);
  const std::vector<FieldElement> zero = {0, 0};
  EXPECT_EQ(rs.Evaluate(zero), std::vector<FieldElement>(7, 0));
  const std::vector<FieldElement> constant = {5, 0};
  EXPECT_EQ(rs.Evaluate(constant), std::vector<FieldElement>(7, 5));
  const std::vector<FieldElement> too_long = {1, 2, 3};
  EXPECT_THROW(rs.Evaluate(too_long), DomainError);
  EXPECT_THROW(RsParams::Make(GaloisField::ForDegree(3), 0), DomainError);
  EXPECT_THROW(RsParams::Make(GaloisField::ForDegree(3), 8), DomainError);
}

TEST(ReedSolomon, MatchesEvaluationOracleAndAgreementBound) {
  for (unsigned m : {2u, 3u, 4u}) {
    const auto field = GaloisField::ForDegree(m);
    const uint64_t q = field->order();
    for (uint64_t k1 = 1; k1 <= 3 && k1 < q; ++k1) {
      const ReedSolomonCode rs(RsParams::Make(field, k1));
      uint64_t count = 1;
      for (uint64_t i = 0; i < k1; ++i) count *= q;
      std::vector<std::vector<FieldElement>> codewords;
      for (uint64_t v = 0; v < count; ++v) {
        std::vector<FieldElement> msg;
        for (uint64_t x = v, i = 0; i < k1; ++i, x /= q) msg.push_back(x % q);
        const auto c = rs.Evaluate(msg);
        const auto expected = SlowCodeword(msg, *field);
        ASSERT_EQ(std::vector<uint64_t>(c.begin(), c.end()), expected);
        codewords.push_back(c);
      }
      for (size_t a = 0; a < codewords.size(); ++a)
        for (size_t b = a + 1; b < codewords.size(); ++b) {
          uint64_t agree = 0;
          for (size_t i = 0; i < codewords[a].size(); ++i) agree += codewords[a][i] == codewords[b][i];
          ASSERT_LE(agree, k1 - 1) << "q=" << q << " k1=" << k1;
        }
    }
  }
}

TEST(ReedSolomon, IsLinear) {
  const auto field = GaloisField::ForDegree(5);
  const ReedSolomonCode rs(RsParams::Make(field, 4));
  const std::vector<FieldElement> a = {3, 17, 0, 29}, b = {30, 1, 22, 29};
  std::vector<FieldElement> sum(4);
  for (int i = 0; i < 4; ++i) sum[i] = a[i] ^ b[i];
  const auto ca = rs.Evaluate(a), cb = rs.Evaluate(b), cs = rs.Evaluate(sum);
  for (size_t i = 0; i < cs.size(); ++i) EXPECT_EQ(cs[i], ca[i] ^ cb[i]);
}

}  // namespace
}  // namespace nagti
