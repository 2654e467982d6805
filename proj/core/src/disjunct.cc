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

#include "nagti/disjunct.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "nagti/errors.h"
#include "nagti/lambert_w.h"

namespace nagti {
namespace {

__extension__ using u128 = unsigned __int128;

constexpr uint64_t kMaxRankTable = uint64_t{1} << 22;
constexpr uint64_t kVerifyGuard = 10'000'000;

// True when q^k >= n, without overflow.
bool PowerCovers(uint64_t q, uint64_t k, uint64_t n) {
  u128 acc = 1;
  for (uint64_t i = 0; i < k; ++i) {
    acc *= q;
    if (acc >= n) return true;
  }
  return acc >= n;
}

void CheckPowerOfTwoItems(uint64_t n) {
  if (n < 2 || !std::has_single_bit(n)) {
    throw DomainError("item count must be a power of two >= 2, got " + std::to_string(n));
  }
}

DisjunctParams FillParams(uint64_t n, uint64_t q, uint64_t k1, unsigned r,
                          unsigned z, uint64_t d_eff) {
  if (!std::has_single_bit(q) || q < 4 || q > (uint64_t{1} << 32)) {
    throw DomainError("field size must be a power of two in [4, 2^32], got " +
                      std::to_string(q));
  }
  if (r < 1 || r > q) throw DomainError("r must be in [1, q]");
  if (z < 1) throw DomainError("z must be >= 1");
  DisjunctParams p;
  p.n = n;
  p.d_eff = d_eff;
  p.r = r;
  p.z = z;
  p.e = (z - 1) / 2;
  p.q = q;
  p.rs = RsParams::Make(
      GaloisField::ForDegree(static_cast<unsigned>(std::countr_zero(q))), k1);
  if (!PowerCovers(q, k1, n)) {
    throw DomainError("q^k1 < n: the code cannot index every item");
  }
  p.subsets = Binomial(q, r);
  const u128 rows =
      static_cast<u128>(p.rs.n1) * p.subsets;
  if (rows > std::numeric_limits<uint64_t>::max()) {
    throw DomainError("row count overflows 64 bits");
  }
  p.rows = static_cast<uint64_t>(rows);
  const double x = static_cast<double>(d_eff) * std::log(static_cast<double>(n));
  if (d_eff >= 1 && x >= std::numbers::e) {
    p.field_size_target = FieldSizeTarget(n, d_eff, r, z);
    p.lambda = static_cast<double>(d_eff) * std::log(static_cast<double>(n)) /
                   LambertW(x) + z;
  } else {
    p.field_size_target = std::numeric_limits<double>::quiet_NaN();
    p.lambda = std::numeric_limits<double>::quiet_NaN();
  }
  return p;
}

}  // namespace

uint64_t Binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 acc = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<uint64_t>::max()) {
      throw DomainError("binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<uint64_t>(acc);
}

double FieldSizeTarget(uint64_t n, uint64_t d_eff, unsigned r, unsigned z) {
  const double log_n = std::log(static_cast<double>(n));
  const double x = static_cast<double>(d_eff) * log_n;
  return static_cast<double>(r) * x / LambertW(x) + z + 1;
}

double SchemeLambda(uint64_t n, uint64_t d_plus_h, unsigned z) {
  const double x = static_cast<double>(d_plus_h) * std::log(static_cast<double>(n));
  return x / LambertW(x) + z;
}

DisjunctParams DeriveParams(uint64_t n, uint64_t d_eff, unsigned r, unsigned z) {
  CheckPowerOfTwoItems(n);
  if (d_eff < 1) throw DomainError("d_eff must be >= 1");
  if (r < 1) throw DomainError("r must be >= 1");
  if (z < 1 || z % 2 == 0) throw DomainError("z must be a positive odd integer");
  if (d_eff + z > n) throw DomainError("d_eff + z must not exceed n");

  const double target = FieldSizeTarget(n, d_eff, r, z);
  // q only changes at powers of two, so snapping a target that sits within
  // a few ulps of 2^k onto 2^k is the only place rounding can matter.
  const int exponent = static_cast<int>(std::floor(std::log2(target)));
  const double lower = std::ldexp(1.0, exponent);
  const double slack = 8 * std::numeric_limits<double>::epsilon() * lower;
  const int q_exponent =
      std::abs(target - lower) <= slack ? exponent : exponent + 1;
  if (q_exponent > 32) {
    throw DomainError("required field size exceeds 2^32");
  }
  const uint64_t q = uint64_t{1} << std::max(q_exponent, 2);
  const uint64_t rd = static_cast<uint64_t>(r) * d_eff;
  const uint64_t k1 = (q - z - 1 + rd - 1) / rd;

  DisjunctParams p = FillParams(n, q, k1, r, z, d_eff);
  // d < (n1 - z) / (r (k1 - 1)); vacuous when k1 == 1.
  if (k1 > 1 && !(d_eff * r * (k1 - 1) < p.rs.n1 - z)) {
    throw InternalError("derived code violates the disjunctness condition");
  }
  return p;
}

DisjunctParams MakeDisjunctParams(uint64_t n, uint64_t q, uint64_t k1,
                                  unsigned r, unsigned z, uint64_t d_eff) {
  if (n < 1) throw DomainError("n must be >= 1");
  return FillParams(n, q, k1, r, z, d_eff);
}

uint64_t ColexRank(std::span<const FieldElement> sorted_subset) {
  uint64_t rank = 0;
  for (size_t k = 0; k < sorted_subset.size(); ++k) {
    rank += Binomial(sorted_subset[k], k + 1);
  }
  return rank;
}

DisjunctCode::DisjunctCode(DisjunctParams params)
    : params_(std::move(params)),
      rs_(params_.rs),
      per_symbol_(Binomial(params_.q - 1, params_.r - 1)) {
  if (per_symbol_ * params_.q <= kMaxRankTable) {
    symbol_ranks_.reserve(per_symbol_ * params_.q);
    for (uint64_t c = 0; c < params_.q; ++c) {
      AppendSymbolRanks(static_cast<FieldElement>(c), symbol_ranks_);
    }
  }
}

void DisjunctCode::AppendSymbolRanks(FieldElement symbol,
                                     std::vector<uint64_t>& out) const {
  const unsigned r = params_.r;
  if (r == 1) {
    out.push_back(symbol);
    return;
  }
  const size_t begin = out.size();
  // Enumerate (r-1)-subsets of the other q-1 symbols, then slot `symbol` in.
  std::vector<uint64_t> idx(r - 1);
  for (unsigned k = 0; k < r - 1; ++k) idx[k] = k;
  std::vector<FieldElement> subset(r);
  const uint64_t others = params_.q - 1;
  while (true) {
    size_t w = 0;
    bool placed = false;
    for (unsigned k = 0; k < r - 1; ++k) {
      const auto element = static_cast<FieldElement>(idx[k] < symbol ? idx[k] : idx[k] + 1);
      if (!placed && symbol < element) {
        subset[w++] = symbol;
        placed = true;
      }
      subset[w++] = element;
    }
    if (!placed) subset[w++] = symbol;
    out.push_back(ColexRank(subset));

    int k = static_cast<int>(r) - 2;
    while (k >= 0 && idx[k] == others - (r - 1) + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (unsigned t = k + 1; t < r - 1; ++t) idx[t] = idx[t - 1] + 1;
  }
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(begin), out.end());
}

std::vector<FieldElement> DisjunctCode::Message(ItemIndex j) const {
  std::vector<FieldElement> message(params_.rs.k1);
  uint64_t code = j - 1;
  for (auto& digit : message) {
    digit = static_cast<FieldElement>(code % params_.q);
    code /= params_.q;
  }
  return message;
}

std::vector<FieldElement> DisjunctCode::Codeword(ItemIndex j) const {
  std::vector<FieldElement> codeword(params_.rs.n1);
  rs_.EvaluateInto(Message(j), codeword);
  return codeword;
}

DisjunctColumn DisjunctCode::Column(ItemIndex j) const {
  if (j < 1 || j > params_.n) {
    throw DomainError("item " + std::to_string(j) + " outside [1, " +
                      std::to_string(params_.n) + "]");
  }
  DisjunctColumn column{j, {}};
  Support(j, column.support);
  return column;
}

void DisjunctCode::Support(ItemIndex j, std::vector<uint64_t>& out) const {
  out.clear();
  out.reserve(column_weight());
  thread_local std::vector<FieldElement> message;
  thread_local std::vector<FieldElement> codeword;
  message.resize(params_.rs.k1);
  codeword.resize(params_.rs.n1);
  uint64_t code = j - 1;
  for (auto& digit : message) {
    digit = static_cast<FieldElement>(code % params_.q);
    code /= params_.q;
  }
  rs_.EvaluateInto(message, codeword);
  std::vector<uint64_t> scratch;
  for (uint64_t i = 0; i < codeword.size(); ++i) {
    const uint64_t base = i * params_.subsets;
    if (!symbol_ranks_.empty()) {
      const uint64_t* ranks = symbol_ranks_.data() + codeword[i] * per_symbol_;
      for (uint64_t t = 0; t < per_symbol_; ++t) out.push_back(base + ranks[t]);
    } else {
      scratch.clear();
      AppendSymbolRanks(codeword[i], scratch);
      for (uint64_t rank : scratch) out.push_back(base + rank);
    }
  }
}

std::vector<FieldElement> DisjunctCode::RowSubset(uint64_t row) const {
  uint64_t rank = row % params_.subsets;
  std::vector<FieldElement> subset(params_.r);
  // Greedy colex unranking from the largest element down.
  for (unsigned k = params_.r; k >= 1; --k) {
    uint64_t a = k - 1;
    while (Binomial(a + 1, k) <= rank) ++a;
    subset[k - 1] = static_cast<FieldElement>(a);
    rank -= Binomial(a, k);
  }
  return subset;
}

DisjunctVerification VerifyDisjunct(std::span<const DisjunctColumn> columns,
                                    uint64_t rows, uint64_t d, unsigned r,
                                    unsigned z) {
  const uint64_t n = columns.size();
  if (r < 1 || d + r > n) throw DomainError("need 1 <= r and d + r <= n");
  uint64_t guard_count;
  try {
    guard_count = Binomial(n, d + r);
  } catch (const DomainError&) {
    guard_count = std::numeric_limits<uint64_t>::max();
  }
  if (guard_count > kVerifyGuard) {
    throw GuardError("binomial(" + std::to_string(n) + ", " + std::to_string(d + r) +
                     ") exceeds the exhaustive verification guard of 1e7");
  }

  const uint64_t words = (rows + 63) / 64;
  std::vector<uint64_t> bits(n * words, 0);
  for (uint64_t c = 0; c < n; ++c) {
    for (uint64_t row : columns[c].support) {
      if (row >= rows) throw DomainError("support row out of range");
      bits[c * words + row / 64] |= uint64_t{1} << (row % 64);
    }
  }
  auto column_bits = [&](uint64_t c) { return bits.data() + c * words; };
  auto count = [&](const std::vector<uint64_t>& v) {
    uint64_t total = 0;
    for (uint64_t w : v) total += std::popcount(w);
    return total;
  };

  DisjunctVerification result;
  std::vector<uint64_t> included(r);
  std::vector<uint64_t> excluded;
  std::vector<std::vector<uint64_t>> residual(d + 1, std::vector<uint64_t>(words));
  std::vector<char> in_s2(n, 0);

  auto fail = [&]() {
    // Pad S1 to size d; removing more columns cannot add rows back.
    std::vector<uint64_t> s1 = excluded;
    for (uint64_t c = 0; c < n && s1.size() < d; ++c) {
      if (!in_s2[c] && std::find(s1.begin(), s1.end(), c) == s1.end()) s1.push_back(c);
    }
    result.ok = false;
    for (uint64_t c : s1) result.excluded.push_back(columns[c].item);
    for (uint64_t c : included) result.included.push_back(columns[c].item);
  };

  // Depth-first over S1 in increasing index order, pruning as soon as the
  // residual drops below z.
  std::function<bool(uint64_t, uint64_t)> search = [&](uint64_t depth, uint64_t next) {
    ++result.pairs_checked;
    if (count(residual[depth]) < z) {
      fail();
      return false;
    }
    if (depth == d) return true;
    for (uint64_t c = next; c < n; ++c) {
      if (in_s2[c]) continue;
      if (n - c < d - depth) break;
      const uint64_t* col = column_bits(c);
      for (uint64_t w = 0; w < words; ++w) {
        residual[depth + 1][w] = residual[depth][w] & ~col[w];
      }
      excluded.push_back(c);
      const bool good = search(depth + 1, c + 1);
      excluded.pop_back();
      if (!good) return false;
    }
    return true;
  };

  for (unsigned k = 0; k < r; ++k) included[k] = k;
  while (true) {
    std::fill(residual[0].begin(), residual[0].end(), ~uint64_t{0});
    for (uint64_t c : included) {
      in_s2[c] = 1;
      const uint64_t* col = column_bits(c);
      for (uint64_t w = 0; w < words; ++w) residual[0][w] &= col[w];
    }
    const bool good = search(0, 0);
    for (uint64_t c : included) in_s2[c] = 0;
    if (!good) return result;

    int k = static_cast<int>(r) - 1;
    while (k >= 0 && included[k] == n - r + k) --k;
    if (k < 0) break;
    ++included[k];
    for (unsigned t = k + 1; t < r; ++t) included[t] = included[t - 1] + 1;
  }
  return result;
}

}  // namespace nagti
