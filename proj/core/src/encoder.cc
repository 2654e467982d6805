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
#include <random>
#include <string>
#include <unordered_set>

#include "nagti/errors.h"

namespace nagti {
namespace {

void CheckSet(const std::vector<ItemIndex>& items, uint64_t n, const char* what) {
  for (size_t i = 0; i < items.size(); ++i) {
    if (items[i] < 1 || items[i] > n) {
      throw DomainError(std::string(what) + " index " + std::to_string(items[i]) +
                        " outside [1, " + std::to_string(n) + "]");
    }
    if (i > 0 && items[i] == items[i - 1]) {
      throw DomainError(std::string("duplicate ") + what + " index " +
                        std::to_string(items[i]));
    }
  }
}

// e distinct draws from [0, size), Floyd's algorithm.
std::vector<uint64_t> DistinctSample(uint64_t size, uint64_t e, std::mt19937_64& rng) {
  std::unordered_set<uint64_t> chosen;
  std::vector<uint64_t> out;
  for (uint64_t j = size - e; j < size; ++j) {
    std::uniform_int_distribution<uint64_t> dist(0, j);
    uint64_t pick = dist(rng);
    if (!chosen.insert(pick).second) {
      pick = j;
      chosen.insert(pick);
    }
    out.push_back(pick);
  }
  return out;
}

}  // namespace

ItemVector::ItemVector(uint64_t n, std::vector<ItemIndex> defectives,
                       std::vector<ItemIndex> inhibitors)
    : n_(n), defectives_(std::move(defectives)), inhibitors_(std::move(inhibitors)) {
  std::sort(defectives_.begin(), defectives_.end());
  std::sort(inhibitors_.begin(), inhibitors_.end());
  if (defectives_.empty()) throw DomainError("at least one defective item is required");
  CheckSet(defectives_, n_, "defective");
  CheckSet(inhibitors_, n_, "inhibitor");
  std::vector<ItemIndex> both;
  std::set_intersection(defectives_.begin(), defectives_.end(), inhibitors_.begin(),
                        inhibitors_.end(), std::back_inserter(both));
  if (!both.empty()) {
    throw DomainError("item " + std::to_string(both.front()) +
                      " is both defective and inhibitor");
  }
}

OutcomeVector NagtiEncode(const MeasurementSpec& spec, const ItemVector& items,
                          unsigned e_budget, OpCounters* counters) {
  if (items.n() != spec.items()) {
    throw DomainError("item vector has n = " + std::to_string(items.n()) +
                      " but the matrix has " + std::to_string(spec.items()) + " columns");
  }
  BitVector positive(spec.rows());
  for (ItemIndex j : items.defectives()) spec.OrColumnInto(j, positive);
  if (!items.inhibitors().empty()) {
    BitVector blocked(spec.rows());
    for (ItemIndex j : items.inhibitors()) spec.OrColumnInto(j, blocked);
    positive.AndNot(blocked);
  }
  if (counters != nullptr) {
    counters->column_generations += items.defectives().size() + items.inhibitors().size();
  }
  return OutcomeVector{std::move(positive), {}, e_budget};
}

Scheme ComposeDefectiveScheme(uint64_t n, uint64_t d, uint64_t h, unsigned z) {
  if (d < 1) throw DomainError("d must be >= 1");
  Scheme scheme;
  scheme.kind = SchemeKind::kDefectiveOnly;
  scheme.n = n;
  scheme.d = d;
  scheme.h = h;
  scheme.z = z;
  scheme.e = (z - 1) / 2;
  scheme.signature = SignatureSpec(n);
  scheme.outer = std::make_shared<const DisjunctCode>(DeriveParams(n, d + h, 1, z));
  scheme.lambda = SchemeLambda(n, d + h, z);
  scheme.matrix = MeasurementSpec::Tensor(MeasurementSpec::Disjunct(scheme.outer),
                                          scheme.signature);
  return scheme;
}

Scheme ComposeFullScheme(uint64_t n, uint64_t d, uint64_t h, unsigned z) {
  if (h < 1) {
    throw DomainError("the full scheme needs h >= 1; use the defective-only scheme");
  }
  Scheme scheme = ComposeDefectiveScheme(n, d, h, z);
  scheme.kind = SchemeKind::kFull;
  const uint64_t pair_d = d + h > 2 ? d + h - 2 : 1;
  scheme.pair = std::make_shared<const DisjunctCode>(DeriveParams(n, pair_d, 2, z));
  const MeasurementSpec g = MeasurementSpec::Disjunct(scheme.pair);
  scheme.matrix = MeasurementSpec::Stack(
      {scheme.matrix, MeasurementSpec::Tensor(g, scheme.signature), g});
  return scheme;
}

Scheme ComposeScheme(SchemeKind kind, uint64_t n, uint64_t d, uint64_t h,
                     unsigned z) {
  if (kind == SchemeKind::kFull && h > 0) return ComposeFullScheme(n, d, h, z);
  return ComposeDefectiveScheme(n, d, h, z);
}

std::string SchemeKindName(SchemeKind kind) {
  return kind == SchemeKind::kFull ? "full" : "defective_only";
}

SchemeKind ParseSchemeKind(const std::string& name) {
  if (name == "full") return SchemeKind::kFull;
  if (name == "defective_only" || name == "defective") return SchemeKind::kDefectiveOnly;
  throw DomainError("unknown scheme '" + name + "' (expected defective_only or full)");
}

std::string ErrorStrategyName(ErrorStrategy strategy) {
  return strategy == ErrorStrategy::kTargeted ? "targeted" : "uniform";
}

ErrorStrategy ParseErrorStrategy(const std::string& name) {
  if (name == "uniform") return ErrorStrategy::kUniform;
  if (name == "targeted") return ErrorStrategy::kTargeted;
  throw DomainError("unknown error strategy '" + name + "' (expected uniform or targeted)");
}

std::vector<uint64_t> CriticalRows(const MeasurementSpec& spec,
                                   const ItemVector& items) {
  BitVector rows(spec.rows());
  for (ItemIndex j : items.defectives()) spec.OrColumnInto(j, rows);
  return rows.SetBits();
}

OutcomeVector InjectErrors(const OutcomeVector& outcome, unsigned e,
                           ErrorStrategy strategy, uint64_t seed,
                           std::span<const uint64_t> critical_rows,
                           bool allow_unsafe) {
  const uint64_t size = outcome.bits.size();
  if (e > outcome.e_budget && !allow_unsafe) {
    throw DomainError("requested " + std::to_string(e) + " errors but the scheme only "
                      "tolerates " + std::to_string(outcome.e_budget));
  }
  if (e > size) throw DomainError("more errors than outcome rows");

  std::mt19937_64 rng(seed);
  std::vector<uint64_t> picks;
  if (strategy == ErrorStrategy::kUniform) {
    picks = DistinctSample(size, e, rng);
  } else {
    std::vector<uint64_t> pool(critical_rows.begin(), critical_rows.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    for (uint64_t row : pool) {
      if (row >= size) throw DomainError("critical row out of range");
    }
    if (pool.size() >= e) {
      for (uint64_t k : DistinctSample(pool.size(), e, rng)) picks.push_back(pool[k]);
    } else {
      picks = pool;
      std::unordered_set<uint64_t> taken(pool.begin(), pool.end());
      std::uniform_int_distribution<uint64_t> dist(0, size - 1);
      while (picks.size() < e) {
        const uint64_t row = dist(rng);
        if (taken.insert(row).second) picks.push_back(row);
      }
    }
  }

  OutcomeVector out = outcome;
  for (uint64_t row : picks) out.bits.Flip(row);
  std::sort(picks.begin(), picks.end());
  std::vector<uint64_t> flipped;
  std::set_symmetric_difference(outcome.flipped.begin(), outcome.flipped.end(),
                                picks.begin(), picks.end(), std::back_inserter(flipped));
  out.flipped = std::move(flipped);
  return out;
}

}  // namespace nagti
