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

#include "nagti/encoder.h"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "nagti/errors.h"
#include "nagti/measurement.h"

namespace nagti {
namespace {

// Outcome computed row by row from a dense copy of the matrix.
BitVector DenseEncode(const BitMatrix& q, const ItemVector& items) {
  BitVector out(q.rows());
  for (uint64_t i = 0; i < q.rows(); ++i) {
    bool defective = false, inhibited = false;
    for (ItemIndex j : items.defectives()) defective |= q.at(i, j - 1);
    for (ItemIndex j : items.inhibitors()) inhibited |= q.at(i, j - 1);
    out.Set(i, defective && !inhibited);
  }
  return out;
}

ItemVector RandomItems(uint64_t n, size_t d, size_t h, std::mt19937_64& rng) {
  std::vector<ItemIndex> all(n);
  for (uint64_t j = 0; j < n; ++j) all[j] = j + 1;
  std::shuffle(all.begin(), all.end(), rng);
  return ItemVector(n, {all.begin(), all.begin() + d}, {all.begin() + d, all.begin() + d + h});
}

TEST(ItemVector, Validation) {
  EXPECT_THROW(ItemVector(8, {}, {1}), DomainError);
  EXPECT_THROW(ItemVector(8, {1, 2}, {2}), DomainError);
  EXPECT_THROW(ItemVector(8, {1, 1}, {}), DomainError);
  EXPECT_THROW(ItemVector(8, {9}, {}), DomainError);
  EXPECT_THROW(ItemVector(8, {0}, {}), DomainError);
  const ItemVector items(8, {5, 2}, {7, 3});
  EXPECT_EQ(items.defectives(), (std::vector<ItemIndex>{2, 5}));
  EXPECT_EQ(items.inhibitors(), (std::vector<ItemIndex>{3, 7}));
}

TEST(NagtiEncode, SingleTestSemantics) {
  // q = 4, k1 = 1, r = 2: row (i, {a, b}) holds exactly items a + 1 and b + 1.
  const auto code = std::make_shared<const DisjunctCode>(MakeDisjunctParams(4, 4, 1, 2, 1, 1));
  const MeasurementSpec spec = MeasurementSpec::Disjunct(code);
  const OutcomeVector alone = NagtiEncode(spec, ItemVector(4, {1}, {}));
  const OutcomeVector blocked = NagtiEncode(spec, ItemVector(4, {1}, {2}));
  // Subset {0, 1} has rank 0, {0, 2} rank 1, {2, 3} rank 5.
  EXPECT_TRUE(alone.bits.Test(0));
  EXPECT_FALSE(blocked.bits.Test(0));
  EXPECT_TRUE(blocked.bits.Test(1));
  EXPECT_FALSE(blocked.bits.Test(5));
}

TEST(NagtiEncode, MatchesMaterializedMatrix) {
  std::mt19937_64 rng(11);
  for (uint64_t n : {16u, 64u, 256u}) {
    const Scheme scheme = ComposeFullScheme(n, 2, 1, 1);
    const BitMatrix dense = scheme.matrix.Materialize();
    for (int trial = 0; trial < 40; ++trial) {
      const ItemVector items = RandomItems(n, 1 + trial % 3, trial % 3, rng);
      OpCounters counters;
      const OutcomeVector out = Encode(scheme, items, &counters);
      ASSERT_EQ(out.bits, DenseEncode(dense, items));
      ASSERT_EQ(counters.column_generations, items.defectives().size() + items.inhibitors().size());
    }
  }
}

TEST(NagtiEncode, Monotone) {
  const Scheme scheme = ComposeFullScheme(64, 3, 2, 3);
  const BitVector base = Encode(scheme, ItemVector(64, {4, 9}, {20})).bits;
  const BitVector more_d = Encode(scheme, ItemVector(64, {4, 9, 33}, {20})).bits;
  const BitVector more_h = Encode(scheme, ItemVector(64, {4, 9}, {20, 50})).bits;
  BitVector check = base;
  check.AndNot(more_d);
  EXPECT_TRUE(check.None());
  check = more_h;
  check.AndNot(base);
  EXPECT_TRUE(check.None());
}

TEST(NagtiEncode, ColumnCountIndependentOfN) {
  for (unsigned log_n : {10u, 20u, 32u}) {
    const uint64_t n = uint64_t{1} << log_n;
    const Scheme scheme = ComposeFullScheme(n, 2, 1, 3);
    OpCounters counters;
    Encode(scheme, ItemVector(n, {1, n}, {n / 2}), &counters);
    EXPECT_EQ(counters.column_generations, 3u);
  }
}

TEST(Schemes, RowCounts) {
  const Scheme t = ComposeDefectiveScheme(1024, 2, 0, 1);
  EXPECT_EQ(t.m(), 240u);
  EXPECT_EQ(t.rows(), 4800u);
  EXPECT_EQ(t.rows(), t.m() * 2 * 10);
  for (unsigned z : {1u, 3u, 5u}) {
    const Scheme v = ComposeFullScheme(uint64_t{1} << 16, 4, 1, z);
    EXPECT_EQ(v.rows(), v.t() + v.g() * v.s() + v.g());
    EXPECT_EQ(v.e, (z - 1) / 2);
    EXPECT_EQ(v.pair->params().d_eff, 3u);
    EXPECT_EQ(v.pair->params().r, 2u);
  }
  EXPECT_EQ(ComposeFullScheme(16, 1, 1, 1).pair->params().d_eff, 1u);
}

TEST(Schemes, Dispatch) {
  EXPECT_THROW(ComposeFullScheme(64, 2, 0, 1), DomainError);
  EXPECT_EQ(ComposeScheme(SchemeKind::kFull, 64, 2, 0, 1).kind, SchemeKind::kDefectiveOnly);
  EXPECT_THROW(ComposeDefectiveScheme(64, 2, 0, 2), DomainError);
  EXPECT_THROW(ComposeDefectiveScheme(60, 2, 0, 1), DomainError);
  EXPECT_THROW(ComposeDefectiveScheme(64, 0, 0, 1), DomainError);
  EXPECT_EQ(ParseSchemeKind("defective"), SchemeKind::kDefectiveOnly);
  EXPECT_EQ(ParseSchemeKind(SchemeKindName(SchemeKind::kFull)), SchemeKind::kFull);
  EXPECT_THROW(ParseSchemeKind("both"), DomainError);
}

TEST(InjectErrors, Budget) {
  const Scheme scheme = ComposeFullScheme(64, 2, 1, 5);
  const OutcomeVector clean = Encode(scheme, ItemVector(64, {3, 40}, {17}));
  EXPECT_EQ(clean.e_budget, 2u);
  EXPECT_EQ(InjectErrors(clean, 0, ErrorStrategy::kUniform, 1).bits, clean.bits);
  EXPECT_THROW(InjectErrors(clean, 3, ErrorStrategy::kUniform, 1), DomainError);
  EXPECT_EQ(InjectErrors(clean, 3, ErrorStrategy::kUniform, 1, {}, true).flipped.size(), 3u);
}

TEST(InjectErrors, FlipTwiceRestores) {
  const Scheme scheme = ComposeFullScheme(256, 2, 1, 5);
  const OutcomeVector clean = Encode(scheme, ItemVector(256, {3, 40}, {17}));
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const OutcomeVector once = InjectErrors(clean, 2, ErrorStrategy::kUniform, seed);
    ASSERT_EQ(once.flipped.size(), 2u);
    ASSERT_EQ(HammingDistance(once.bits, clean.bits), 2u);
    ASSERT_EQ(InjectErrors(once, 2, ErrorStrategy::kUniform, seed).bits, clean.bits);
  }
}

TEST(InjectErrors, TargetedStaysInCriticalRows) {
  const Scheme scheme = ComposeFullScheme(256, 2, 1, 5);
  const ItemVector items(256, {3, 40}, {17});
  const OutcomeVector clean = Encode(scheme, items);
  const std::vector<uint64_t> critical = CriticalRows(scheme.matrix, items);
  const std::set<uint64_t> allowed(critical.begin(), critical.end());
  std::set<uint64_t> expected;
  for (ItemIndex j : items.defectives())
    for (uint64_t row : scheme.matrix.Column(j)) expected.insert(row);
  EXPECT_EQ(allowed, expected);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const OutcomeVector noisy = InjectErrors(clean, 2, ErrorStrategy::kTargeted, seed, critical);
    for (uint64_t row : noisy.flipped) ASSERT_TRUE(allowed.count(row));
  }
}

}  // namespace
}  // namespace nagti
