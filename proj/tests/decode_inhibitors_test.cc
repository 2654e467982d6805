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

#include "nagti/decode_inhibitors.h"

#include <cstdint>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "nagti/encoder.h"
#include "nagti/errors.h"
#include "nagti/oracle.h"
#include "nagti/simulation.h"

namespace nagti {
namespace {

TEST(ChooseReferenceDefective, Smallest) {
  const std::vector<ItemIndex> one = {5}, two = {7, 3}, three = {3, 7};
  EXPECT_EQ(ChooseReferenceDefective(one), 5u);
  EXPECT_EQ(ChooseReferenceDefective(two), 3u);
  EXPECT_EQ(ChooseReferenceDefective(three), ChooseReferenceDefective(two));
  EXPECT_THROW(ChooseReferenceDefective(std::vector<ItemIndex>{}), DomainError);
}

TEST(GetInhibitors, NoiselessExhaustive) {
  const Scheme scheme = ComposeFullScheme(16, 2, 1, 1);
  for (const ItemVector& items : EnumerateInstances(16, 2, 1)) {
    const DecodeResult r = GetInhibitors(Encode(scheme, items).bits, scheme);
    ASSERT_EQ(r.defectives, items.defectives());
    ASSERT_EQ(r.inhibitors, items.inhibitors());
  }
}

TEST(GetInhibitors, NoInhibitors) {
  const Scheme scheme = ComposeFullScheme(1024, 4, 1, 3);
  const ItemVector items(1024, {10, 300, 999}, {});
  const DecodeResult r = GetInhibitors(Encode(scheme, items).bits, scheme);
  EXPECT_EQ(r.defectives, items.defectives());
  EXPECT_TRUE(r.inhibitors.empty());
}

TEST(GetInhibitors, Errors) {
  const Scheme scheme = ComposeFullScheme(64, 2, 1, 1);
  EXPECT_THROW(GetInhibitors(BitVector(scheme.rows()), scheme), DomainError);
  EXPECT_THROW(GetInhibitors(BitVector(scheme.rows() - 1), scheme), DomainError);
}

// Random instances at a larger n with flips anywhere in v, up to e of them.
TEST(GetInhibitors, RandomFlipsUpToBudget) {
  const uint64_t n = 1 << 12;
  std::mt19937_64 rng(5);
  for (unsigned z : {3u, 5u}) {
    const Scheme scheme = ComposeFullScheme(n, 3, 2, z);
    std::uniform_int_distribution<ItemIndex> pick(1, n);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<ItemIndex> chosen;
      while (chosen.size() < 5) {
        const ItemIndex j = pick(rng);
        if (std::find(chosen.begin(), chosen.end(), j) == chosen.end()) chosen.push_back(j);
      }
      const size_t d = 1 + trial % 3, h = trial % 3;
      const ItemVector items(n, {chosen.begin(), chosen.begin() + d},
                             {chosen.begin() + 3, chosen.begin() + 3 + h});
      const OutcomeVector clean = Encode(scheme, items);
      const auto strategy = trial % 2 ? ErrorStrategy::kTargeted : ErrorStrategy::kUniform;
      const auto critical = CriticalRows(scheme.matrix, items);
      const OutcomeVector noisy = InjectErrors(clean, scheme.e, strategy, trial, critical);
      const DecodeResult r = Decode(noisy.bits, scheme);
      ASSERT_EQ(r.defectives, items.defectives()) << "z=" << z << " trial=" << trial;
      ASSERT_EQ(r.inhibitors, items.inhibitors()) << "z=" << z << " trial=" << trial;
      ASSERT_LE(r.counters.column_generations, ColumnGenerationBound(scheme));
      DecodeConfig no_skip;
      no_skip.skip_zero_blocks = false;
      ASSERT_EQ(Decode(noisy.bits, scheme, no_skip), r);
    }
  }
}

TEST(GetInhibitors, CandidatesPassTheMultiplicityFilter) {
  const Scheme scheme = ComposeFullScheme(256, 2, 1, 3);
  const ItemVector items(256, {7, 200}, {31});
  const DecodeResult r = Decode(Encode(scheme, items).bits, scheme);
  ASSERT_FALSE(r.inhibitor_candidates.empty());
  EXPECT_TRUE(std::binary_search(r.inhibitor_candidates.begin(), r.inhibitor_candidates.end(), 31u));
  for (ItemIndex d : r.defectives)
    EXPECT_FALSE(std::binary_search(r.inhibitor_candidates.begin(), r.inhibitor_candidates.end(), d));
}

TEST(Decode, DefectiveOnlyScheme) {
  const Scheme scheme = ComposeDefectiveScheme(1 << 20, 4, 1, 3);
  const ItemVector items(1 << 20, {1, 77, 1 << 19, 1 << 20}, {12345});
  OutcomeVector out = Encode(scheme, items);
  out = InjectErrors(out, 1, ErrorStrategy::kUniform, 9);
  const DecodeResult r = Decode(out.bits, scheme);
  EXPECT_EQ(r.defectives, items.defectives());
  EXPECT_TRUE(r.inhibitors.empty());
}

}  // namespace
}  // namespace nagti
