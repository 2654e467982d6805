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

#ifndef NAGTI_MEASUREMENT_H_
#define NAGTI_MEASUREMENT_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "nagti/bit_vector.h"
#include "nagti/disjunct.h"
#include "nagti/signature.h"

namespace nagti {

// Small dense 0/1 matrix. Only used where a matrix is deliberately
// materialized: worked examples, oracles and tests.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(uint64_t rows, uint64_t cols);

  uint64_t rows() const { return rows_; }
  uint64_t cols() const { return cols_; }
  bool at(uint64_t i, uint64_t j) const { return cells_[i * cols_ + j] != 0; }
  void set(uint64_t i, uint64_t j, bool v = true) { cells_[i * cols_ + j] = v; }

  // Row-major 0/1 literal, e.g. {{1, 0}, {0, 1}}.
  static BitMatrix FromRows(const std::vector<std::vector<int>>& rows);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  uint64_t rows_ = 0;
  uint64_t cols_ = 0;
  std::vector<uint8_t> cells_;
};

// The row-wise tensor product A (x) S: for each row i of A, the block
// S * diag(A_i). Result has A.rows() * S.rows() rows. Throws DomainError when
// the column counts differ.
BitMatrix TensorProduct(const BitMatrix& outer, const BitMatrix& inner);

// One block of a tensor product against the signature matrix: column j is
// outer_row[j] * S_j. Throws DomainError when outer_row.size() != n.
BitMatrix TensorRowBlock(const BitVector& outer_row, const SignatureSpec& inner);

enum class MeasurementKind { kSignature, kDisjunct, kTensor, kStack };

// Implicit description of a measurement matrix. Nothing is materialized:
// every node can produce any single column on demand, which is all the
// encoder and decoders ever need. Cheap to copy (shared immutable node).
class MeasurementSpec {
 public:
  MeasurementSpec() = default;

  static MeasurementSpec Signature(const SignatureSpec& spec);
  static MeasurementSpec Disjunct(std::shared_ptr<const DisjunctCode> code);
  // Rows are block-major: outer row i occupies rows [i*s, (i+1)*s).
  static MeasurementSpec Tensor(const MeasurementSpec& outer,
                                const SignatureSpec& inner);
  static MeasurementSpec Stack(std::vector<MeasurementSpec> parts);

  MeasurementKind kind() const;
  uint64_t rows() const;
  uint64_t items() const;

  // Accessors for the node's children; throw DomainError on the wrong kind.
  const SignatureSpec& signature() const;
  const DisjunctCode& code() const;
  const MeasurementSpec& outer() const;
  const std::vector<MeasurementSpec>& parts() const;

  // Sorted row indices of column j. Throws DomainError when j is outside
  // [1, items()].
  std::vector<uint64_t> Column(ItemIndex j) const;

  // ORs column j into acc[row_offset, row_offset + rows()). No range check on
  // j; acc must be long enough.
  void OrColumnInto(ItemIndex j, BitVector& acc, uint64_t row_offset = 0) const;

  // Dense copy, built column by column. Throws GuardError above 2^26 cells.
  BitMatrix Materialize() const;

 private:
  struct Node;
  explicit MeasurementSpec(std::shared_ptr<const Node> node);
  const Node& node() const;

  std::shared_ptr<const Node> node_;
};

}  // namespace nagti

#endif  // NAGTI_MEASUREMENT_H_
