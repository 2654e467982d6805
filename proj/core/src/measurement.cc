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

#include "nagti/measurement.h"

#include <string>
#include <variant>

#include "nagti/errors.h"

namespace nagti {
namespace {

constexpr uint64_t kMaxMaterializedCells = uint64_t{1} << 26;

struct TensorNode {
  MeasurementSpec outer;
  SignatureSpec inner;
};

}  // namespace

struct MeasurementSpec::Node {
  std::variant<SignatureSpec, std::shared_ptr<const DisjunctCode>, TensorNode,
               std::vector<MeasurementSpec>>
      value;
  uint64_t rows = 0;
  uint64_t items = 0;
};

BitMatrix::BitMatrix(uint64_t rows, uint64_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

BitMatrix BitMatrix::FromRows(const std::vector<std::vector<int>>& rows) {
  const uint64_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (uint64_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged matrix literal");
    for (uint64_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j] != 0);
  }
  return m;
}

BitMatrix TensorProduct(const BitMatrix& outer, const BitMatrix& inner) {
  if (outer.cols() != inner.cols()) {
    throw DomainError("tensor product needs equal column counts");
  }
  BitMatrix out(outer.rows() * inner.rows(), outer.cols());
  for (uint64_t i = 0; i < outer.rows(); ++i) {
    for (uint64_t l = 0; l < inner.rows(); ++l) {
      for (uint64_t j = 0; j < outer.cols(); ++j) {
        out.set(i * inner.rows() + l, j, outer.at(i, j) && inner.at(l, j));
      }
    }
  }
  return out;
}

BitMatrix TensorRowBlock(const BitVector& outer_row, const SignatureSpec& inner) {
  if (outer_row.size() != inner.n()) {
    throw DomainError("outer row has " + std::to_string(outer_row.size()) +
                      " entries, signature matrix has " + std::to_string(inner.n()) +
                      " columns");
  }
  BitMatrix out(inner.s(), inner.n());
  for (uint64_t j = 0; j < inner.n(); ++j) {
    if (!outer_row.Test(j)) continue;
    const SignatureColumn col = MakeSignatureColumn(j + 1, inner);
    for (unsigned l = 0; l < inner.s(); ++l) out.set(l, j, col.Row(l));
  }
  return out;
}

MeasurementSpec::MeasurementSpec(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

const MeasurementSpec::Node& MeasurementSpec::node() const {
  if (!node_) throw DomainError("empty MeasurementSpec");
  return *node_;
}

MeasurementSpec MeasurementSpec::Signature(const SignatureSpec& spec) {
  return MeasurementSpec(std::make_shared<const Node>(Node{spec, spec.s(), spec.n()}));
}

MeasurementSpec MeasurementSpec::Disjunct(std::shared_ptr<const DisjunctCode> code) {
  if (!code) throw DomainError("null disjunct code");
  const uint64_t rows = code->rows();
  const uint64_t items = code->items();
  return MeasurementSpec(
      std::make_shared<const Node>(Node{std::move(code), rows, items}));
}

MeasurementSpec MeasurementSpec::Tensor(const MeasurementSpec& outer,
                                        const SignatureSpec& inner) {
  if (outer.items() != inner.n()) {
    throw DomainError("tensor factors disagree on the item count");
  }
  const uint64_t rows = outer.rows() * inner.s();
  return MeasurementSpec(
      std::make_shared<const Node>(Node{TensorNode{outer, inner}, rows, inner.n()}));
}

MeasurementSpec MeasurementSpec::Stack(std::vector<MeasurementSpec> parts) {
  if (parts.empty()) throw DomainError("cannot stack zero matrices");
  uint64_t rows = 0;
  const uint64_t items = parts.front().items();
  for (const auto& p : parts) {
    if (p.items() != items) throw DomainError("stacked matrices disagree on the item count");
    rows += p.rows();
  }
  return MeasurementSpec(
      std::make_shared<const Node>(Node{std::move(parts), rows, items}));
}

MeasurementKind MeasurementSpec::kind() const {
  return static_cast<MeasurementKind>(node().value.index());
}

uint64_t MeasurementSpec::rows() const { return node().rows; }
uint64_t MeasurementSpec::items() const { return node().items; }

const SignatureSpec& MeasurementSpec::signature() const {
  if (const auto* v = std::get_if<SignatureSpec>(&node().value)) return *v;
  if (const auto* t = std::get_if<TensorNode>(&node().value)) return t->inner;
  throw DomainError("not a signature or tensor node");
}

const DisjunctCode& MeasurementSpec::code() const {
  if (const auto* v = std::get_if<std::shared_ptr<const DisjunctCode>>(&node().value)) {
    return **v;
  }
  throw DomainError("not a disjunct node");
}

const MeasurementSpec& MeasurementSpec::outer() const {
  if (const auto* t = std::get_if<TensorNode>(&node().value)) return t->outer;
  throw DomainError("not a tensor node");
}

const std::vector<MeasurementSpec>& MeasurementSpec::parts() const {
  if (const auto* v = std::get_if<std::vector<MeasurementSpec>>(&node().value)) return *v;
  throw DomainError("not a stack node");
}

std::vector<uint64_t> MeasurementSpec::Column(ItemIndex j) const {
  if (j < 1 || j > items()) {
    throw DomainError("item " + std::to_string(j) + " outside [1, " +
                      std::to_string(items()) + "]");
  }
  std::vector<uint64_t> out;
  const Node& n = node();
  if (const auto* sig = std::get_if<SignatureSpec>(&n.value)) {
    const SignatureColumn col = MakeSignatureColumn(j, *sig);
    for (unsigned l = 0; l < col.s; ++l) {
      if (col.Row(l)) out.push_back(l);
    }
  } else if (const auto* code = std::get_if<std::shared_ptr<const DisjunctCode>>(&n.value)) {
    (*code)->Support(j, out);
  } else if (const auto* t = std::get_if<TensorNode>(&n.value)) {
    const SignatureColumn col = MakeSignatureColumn(j, t->inner);
    for (uint64_t o : t->outer.Column(j)) {
      for (unsigned l = 0; l < col.s; ++l) {
        if (col.Row(l)) out.push_back(o * col.s + l);
      }
    }
  } else {
    uint64_t offset = 0;
    for (const auto& part : std::get<std::vector<MeasurementSpec>>(n.value)) {
      for (uint64_t row : part.Column(j)) out.push_back(offset + row);
      offset += part.rows();
    }
  }
  return out;
}

void MeasurementSpec::OrColumnInto(ItemIndex j, BitVector& acc,
                                   uint64_t row_offset) const {
  const Node& n = node();
  if (const auto* sig = std::get_if<SignatureSpec>(&n.value)) {
    acc.OrBlock(row_offset, sig->s(), sig->ColumnBits(j));
  } else if (const auto* code = std::get_if<std::shared_ptr<const DisjunctCode>>(&n.value)) {
    std::vector<uint64_t> support;
    (*code)->Support(j, support);
    for (uint64_t row : support) acc.Set(row_offset + row);
  } else if (const auto* t = std::get_if<TensorNode>(&n.value)) {
    const unsigned s = t->inner.s();
    const uint64_t bits = t->inner.ColumnBits(j);
    if (t->outer.kind() == MeasurementKind::kDisjunct) {
      std::vector<uint64_t> support;
      t->outer.code().Support(j, support);
      for (uint64_t o : support) acc.OrBlock(row_offset + o * s, s, bits);
    } else {
      for (uint64_t o : t->outer.Column(j)) acc.OrBlock(row_offset + o * s, s, bits);
    }
  } else {
    uint64_t offset = row_offset;
    for (const auto& part : std::get<std::vector<MeasurementSpec>>(n.value)) {
      part.OrColumnInto(j, acc, offset);
      offset += part.rows();
    }
  }
}

BitMatrix MeasurementSpec::Materialize() const {
  if (items() != 0 && rows() > kMaxMaterializedCells / items()) {
    throw GuardError("matrix too large to materialize");
  }
  BitMatrix out(rows(), items());
  for (ItemIndex j = 1; j <= items(); ++j) {
    for (uint64_t row : Column(j)) out.set(row, j - 1);
  }
  return out;
}

}  // namespace nagti
