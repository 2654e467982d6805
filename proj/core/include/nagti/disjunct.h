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

#ifndef NAGTI_DISJUNCT_H_
#define NAGTI_DISJUNCT_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "nagti/galois.h"
#include "nagti/signature.h"

namespace nagti {

// Parameters of a nonrandom (d, r; z]-disjunct matrix built by concatenating
// an [q-1, k1]_q Reed-Solomon outer code with an r-subset inner code.
struct DisjunctParams {
  uint64_t n = 0;      // items (columns)
  uint64_t d_eff = 0;  // size of the excluded set
  unsigned r = 1;      // size of the included set
  unsigned z = 1;      // guaranteed row multiplicity
  unsigned e = 0;      // (z - 1) / 2
  RsParams rs;
  uint64_t q = 0;
  uint64_t subsets = 0;  // binomial(q, r)
  uint64_t rows = 0;     // n1 * binomial(q, r)
  // r d ln n / W(d ln n) + z + 1, the quantity q is rounded up from. NaN for
  // hand-built parameters where d ln n < e.
  double field_size_target = 0;
  // d ln n / W(d ln n) + z. NaN under the same condition.
  double lambda = 0;
};

// r d ln n / W(d ln n) + z + 1. Throws DomainError when d ln n < e.
double FieldSizeTarget(uint64_t n, uint64_t d_eff, unsigned r, unsigned z);

// (d + h) ln n / W((d + h) ln n) + z, the scale of every test count.
double SchemeLambda(uint64_t n, uint64_t d_plus_h, unsigned z);

// Picks q as the smallest power of two >= FieldSizeTarget (the target itself
// when it is a power of two up to floating-point noise) and
// k1 = ceil((q - z - 1) / (r d)). n must be a power of two, z odd and
// d_eff + z <= n. Throws DomainError on bad input and InternalError if the
// derived code fails the disjunctness condition or cannot index n items.
DisjunctParams DeriveParams(uint64_t n, uint64_t d_eff, unsigned r, unsigned z);

// Hand-picked field size and dimension, for small experiments and tests.
// Checks n <= q^k1 and r <= q but not the disjunctness condition.
DisjunctParams MakeDisjunctParams(uint64_t n, uint64_t q, uint64_t k1,
                                  unsigned r, unsigned z, uint64_t d_eff);

// Exact binomial coefficient; throws DomainError on uint64 overflow.
uint64_t Binomial(uint64_t n, uint64_t k);

struct DisjunctColumn {
  ItemIndex item = 0;
  std::vector<uint64_t> support;  // sorted row indices holding a 1
};

// Column generator for the matrix described by DisjunctParams.
//
// Row (i, A) is indexed i * binomial(q, r) + colex_rank(A) for codeword
// position i in [0, q-1) and A an r-subset of GF(q). Item j maps to the
// message whose symbols are the base-q digits of j - 1, least significant
// first; its column has a 1 in row (i, A) iff codeword symbol i lies in A.
// Generating one column never touches any other column.
class DisjunctCode {
 public:
  explicit DisjunctCode(DisjunctParams params);

  const DisjunctParams& params() const { return params_; }
  uint64_t rows() const { return params_.rows; }
  uint64_t items() const { return params_.n; }
  // binomial(q-1, r-1) * n1, the weight of every column.
  uint64_t column_weight() const { return per_symbol_ * params_.rs.n1; }

  std::vector<FieldElement> Message(ItemIndex j) const;
  std::vector<FieldElement> Codeword(ItemIndex j) const;

  // Throws DomainError when j is outside [1, n].
  DisjunctColumn Column(ItemIndex j) const;
  // Replaces `out` with the sorted support of column j. No range check.
  void Support(ItemIndex j, std::vector<uint64_t>& out) const;

  // Elements of the subset A labelling `row`, ascending.
  std::vector<FieldElement> RowSubset(uint64_t row) const;
  uint64_t RowPosition(uint64_t row) const { return row / params_.subsets; }

 private:
  void AppendSymbolRanks(FieldElement symbol, std::vector<uint64_t>& out) const;

  DisjunctParams params_;
  ReedSolomonCode rs_;
  uint64_t per_symbol_;
  // q rows of per_symbol_ sorted ranks, when small enough to tabulate.
  std::vector<uint64_t> symbol_ranks_;
};

// Colexicographic rank of a sorted subset: sum over k of binomial(a_k, k+1).
uint64_t ColexRank(std::span<const FieldElement> sorted_subset);

struct DisjunctVerification {
  bool ok = true;
  // First violating pair found, when !ok.
  std::vector<ItemIndex> excluded;  // S1, |S1| = d
  std::vector<ItemIndex> included;  // S2, |S2| = r
  uint64_t pairs_checked = 0;
};

// Brute force check of the (d, r; z] property: every r-set S2 keeps at least
// z rows of all ones outside the union of every disjoint d-set S1. Columns
// are matched to items by position. Throws GuardError when
// binomial(n, d + r) > 1e7.
DisjunctVerification VerifyDisjunct(std::span<const DisjunctColumn> columns,
                                    uint64_t rows, uint64_t d, unsigned r,
                                    unsigned z);

}  // namespace nagti

#endif  // NAGTI_DISJUNCT_H_
