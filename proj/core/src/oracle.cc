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

#include "nagti/oracle.h"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "nagti/decode_inhibitors.h"
#include "nagti/errors.h"

namespace nagti {
namespace {

// Advances a sorted k-subset of [., hi] to its lexicographic successor.
bool NextCombination(std::vector<uint64_t>& c, uint64_t hi) {
  const size_t k = c.size();
  for (size_t i = k; i-- > 0;) {
    if (c[i] < hi - (k - 1 - i)) {
      ++c[i];
      for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void ForEachCombination(uint64_t lo, uint64_t hi, uint64_t k,
                        const std::function<void(const std::vector<uint64_t>&)>& fn) {
  if (k > hi - lo + 1) return;
  std::vector<uint64_t> c(k);
  for (uint64_t i = 0; i < k; ++i) c[i] = lo + i;
  do {
    fn(c);
  } while (k > 0 && NextCombination(c, hi));
}

void CheckGuard(uint64_t n, uint64_t d, uint64_t h) {
  const double size = static_cast<double>(Binomial(n, d)) * static_cast<double>(Binomial(n, h));
  if (size > static_cast<double>(kOracleGuard)) {
    throw GuardError("exhaustive search over binomial(" + std::to_string(n) + ", " +
                     std::to_string(d) + ") * binomial(" + std::to_string(n) + ", " +
                     std::to_string(h) + ") candidates exceeds the guard");
  }
}

bool SameSets(const ItemVector& a, const std::vector<ItemIndex>& d,
              const std::vector<ItemIndex>& h) {
  return a.defectives() == d && a.inhibitors() == h;
}

uint64_t CountMissing(const std::vector<ItemIndex>& truth,
                      const std::vector<ItemIndex>& found) {
  uint64_t missing = 0;
  for (ItemIndex j : truth) {
    if (!std::binary_search(found.begin(), found.end(), j)) ++missing;
  }
  return missing;
}

// A true item survived the vote but not sanitization.
bool RemovedTrue(const std::vector<ItemIndex>& truth,
                 const std::vector<ItemIndex>& candidates,
                 const std::vector<ItemIndex>& found) {
  for (ItemIndex j : truth) {
    if (std::binary_search(candidates.begin(), candidates.end(), j) &&
        !std::binary_search(found.begin(), found.end(), j)) {
      return true;
    }
  }
  return false;
}

void Tally(RuleTally& tally, const ItemVector& truth, const DecodeResult& result,
           bool with_inhibitors) {
  ++tally.cases;
  const auto& d = truth.defectives();
  const auto& h = truth.inhibitors();
  tally.false_neg_defectives += CountMissing(d, result.defectives);
  tally.false_pos_defectives += CountMissing(result.defectives, d);
  if (RemovedTrue(d, result.defective_candidates, result.defectives)) {
    ++tally.removed_true_defectives;
  }
  bool exact = result.defectives == d;
  if (with_inhibitors) {
    tally.false_neg_inhibitors += CountMissing(h, result.inhibitors);
    tally.false_pos_inhibitors += CountMissing(result.inhibitors, h);
    if (RemovedTrue(h, result.inhibitor_candidates, result.inhibitors)) {
      ++tally.removed_true_inhibitors;
    }
    exact = exact && result.inhibitors == h;
  }
  if (exact) ++tally.exact;
}

}  // namespace

BitVector ReferenceEncode(const MeasurementSpec& spec, const ItemVector& items) {
  BitVector positive(spec.rows());
  BitVector blocked(spec.rows());
  for (ItemIndex j : items.defectives()) {
    for (uint64_t row : spec.Column(j)) positive.Set(row);
  }
  for (ItemIndex j : items.inhibitors()) {
    for (uint64_t row : spec.Column(j)) blocked.Set(row);
  }
  BitVector out(spec.rows());
  for (uint64_t row = 0; row < spec.rows(); ++row) {
    if (positive.Test(row) && !blocked.Test(row)) out.Set(row);
  }
  return out;
}

uint64_t InstanceCount(uint64_t n, uint64_t d, uint64_t h) {
  uint64_t total = 0;
  for (uint64_t a = 1; a <= d && a <= n; ++a) {
    uint64_t inhibitor_sets = 0;
    for (uint64_t b = 0; b <= h && a + b <= n; ++b) inhibitor_sets += Binomial(n - a, b);
    total += Binomial(n, a) * inhibitor_sets;
  }
  return total;
}

std::vector<ItemVector> EnumerateInstances(uint64_t n, uint64_t d, uint64_t h) {
  CheckGuard(n, d, h);
  std::vector<ItemVector> out;
  out.reserve(InstanceCount(n, d, h));
  for (uint64_t a = 1; a <= d && a <= n; ++a) {
    for (uint64_t b = 0; b <= h && a + b <= n; ++b) {
      ForEachCombination(1, n, a, [&](const std::vector<uint64_t>& defectives) {
        std::vector<uint64_t> rest;
        for (uint64_t j = 1; j <= n; ++j) {
          if (!std::binary_search(defectives.begin(), defectives.end(), j)) rest.push_back(j);
        }
        ForEachCombination(0, rest.size() - 1, b, [&](const std::vector<uint64_t>& pick) {
          std::vector<ItemIndex> inhibitors;
          for (uint64_t k : pick) inhibitors.push_back(rest[k]);
          out.emplace_back(n, defectives, std::move(inhibitors));
        });
      });
    }
  }
  return out;
}

std::vector<Explanation> BruteForceDecode(const BitVector& outcome,
                                          const MeasurementSpec& spec, uint64_t d,
                                          uint64_t h, unsigned e) {
  if (outcome.size() != spec.rows()) {
    throw DomainError("outcome length does not match the matrix");
  }
  std::vector<Explanation> out;
  for (const ItemVector& candidate : EnumerateInstances(spec.items(), d, h)) {
    const uint64_t distance = HammingDistance(ReferenceEncode(spec, candidate), outcome);
    if (distance <= e) {
      out.push_back({candidate.defectives(), candidate.inhibitors(), distance});
    }
  }
  return out;
}

ExplanationIndex::ExplanationIndex(const MeasurementSpec& spec, uint64_t d, uint64_t h)
    : instances_(EnumerateInstances(spec.items(), d, h)) {
  encodings_.reserve(instances_.size());
  for (const ItemVector& candidate : instances_) {
    encodings_.push_back(ReferenceEncode(spec, candidate));
  }
}

std::vector<Explanation> ExplanationIndex::Explain(const BitVector& outcome,
                                                   unsigned e) const {
  std::vector<Explanation> out;
  for (size_t k : ExplainIndices(outcome, e)) {
    out.push_back({instances_[k].defectives(), instances_[k].inhibitors(),
                   HammingDistance(encodings_[k], outcome)});
  }
  return out;
}

std::vector<size_t> ExplanationIndex::ExplainIndices(const BitVector& outcome,
                                                     unsigned e) const {
  std::vector<size_t> out;
  for (size_t k = 0; k < instances_.size(); ++k) {
    if (HammingDistance(encodings_[k], outcome) <= e) out.push_back(k);
  }
  return out;
}

std::vector<ExplanationIndex::Neighbour> ExplanationIndex::Neighbours(
    size_t i, uint64_t radius) const {
  std::vector<Neighbour> out;
  for (size_t k = 0; k < encodings_.size(); ++k) {
    const uint64_t distance = HammingDistance(encodings_[k], encodings_[i]);
    if (distance <= radius) out.push_back({k, distance});
  }
  return out;
}

std::vector<size_t> ExplanationIndex::ExplainFlipped(size_t i,
                                                     std::span<const Neighbour> near,
                                                     std::span<const uint64_t> flips,
                                                     unsigned e) const {
  std::vector<size_t> out;
  const BitVector& base = encodings_[i];
  for (const Neighbour& candidate : near) {
    const BitVector& enc = encodings_[candidate.index];
    int64_t distance = static_cast<int64_t>(candidate.distance);
    for (uint64_t row : flips) distance += enc.Test(row) == base.Test(row) ? 1 : -1;
    if (distance <= static_cast<int64_t>(e)) out.push_back(candidate.index);
  }
  return out;
}

std::string FlipModeName(FlipMode mode) {
  switch (mode) {
    case FlipMode::kNone:
      return "none";
    case FlipMode::kExhaustive:
      return "exhaustive";
    case FlipMode::kSampled:
      return "sampled";
  }
  return "none";
}

FlipMode ParseFlipMode(const std::string& name) {
  if (name == "none") return FlipMode::kNone;
  if (name == "exhaustive") return FlipMode::kExhaustive;
  if (name == "sampled") return FlipMode::kSampled;
  throw DomainError("unknown flip mode '" + name + "' (expected none, exhaustive or sampled)");
}

SweepReport ExhaustiveInstanceSweep(const SweepOptions& options) {
  SweepReport report;
  report.options = options;
  const Scheme defective_scheme =
      ComposeDefectiveScheme(options.n, options.d, options.h, options.z);
  const bool full = options.h > 0;
  Scheme full_scheme;
  if (full) full_scheme = ComposeFullScheme(options.n, options.d, options.h, options.z);
  const unsigned e = defective_scheme.e;
  report.e = e;
  report.t_rows = defective_scheme.rows();
  report.v_rows = full ? full_scheme.rows() : 0;

  const std::vector<ItemVector> instances =
      EnumerateInstances(options.n, options.d, options.h);
  report.instances = instances.size();

  auto patterns_per_instance = [&](uint64_t rows) {
    if (options.flip_mode == FlipMode::kNone) return uint64_t{1};
    uint64_t total = 0;
    for (unsigned w = 0; w <= e; ++w) total += Binomial(rows, w);
    return total;
  };
  auto use_sampling = [&](uint64_t rows) {
    if (options.flip_mode == FlipMode::kSampled) return e > 0;
    if (options.flip_mode == FlipMode::kNone) return false;
    const double cases = double(patterns_per_instance(rows)) * double(instances.size());
    return cases > double(options.case_budget);
  };

  DecodeConfig threshold;
  DecodeConfig literal;
  literal.rule = SanitizeRule::kPaperLiteral;

  auto sweep_scheme = [&](const Scheme& scheme, bool with_inhibitors) {
    const uint64_t rows = scheme.rows();
    std::unique_ptr<ExplanationIndex> index;
    if (options.check_oracle) {
      index = std::make_unique<ExplanationIndex>(scheme.matrix, options.d, options.h);
    }
    RuleTally& tally_threshold =
        with_inhibitors ? report.full_threshold : report.defective_threshold;
    RuleTally& tally_literal = with_inhibitors ? report.full_literal : report.defective_literal;

    auto run = [&](const ItemVector& truth, const BitVector& outcome, auto&& oracle_check) {
      auto decode = [&](const DecodeConfig& config, RuleTally& tally) {
        DecodeResult result;
        try {
          result = with_inhibitors ? GetInhibitors(outcome, scheme, e, config)
                                   : DecodeDefectiveScheme(outcome, scheme, e, config);
        } catch (const DomainError&) {
          ++tally.cases;
          ++tally.decode_errors;
          tally.false_neg_defectives += truth.defectives().size();
          return std::optional<DecodeResult>();
        }
        Tally(tally, truth, result, with_inhibitors);
        return std::optional<DecodeResult>(std::move(result));
      };
      auto result = decode(threshold, tally_threshold);
      if (options.check_oracle) oracle_check(result);
      std::optional<DecodeResult> literal_result;
      if (options.run_literal) literal_result = decode(literal, tally_literal);
      if (with_inhibitors && options.check_skip) {
        auto compare = [&](DecodeConfig config, const std::optional<DecodeResult>& fast) {
          config.skip_zero_blocks = false;
          std::optional<DecodeResult> slow;
          try {
            slow = GetInhibitors(outcome, scheme, e, config);
          } catch (const DomainError&) {
          }
          ++report.skip_checks;
          if (slow.has_value() != fast.has_value() || (slow && !(*slow == *fast))) {
            ++report.skip_mismatches;
          }
        };
        compare(threshold, result);
        if (options.run_literal && options.check_skip_literal) {
          compare(literal, literal_result);
        }
      }
    };

    auto check_against = [&](const std::vector<size_t>& explanations,
                             const std::optional<DecodeResult>& result) {
      ++report.oracle_checks;
      bool found = false;
      bool unique = true;
      for (size_t k : explanations) {
        const ItemVector& candidate = index->instances()[k];
        if (result && (with_inhibitors
                           ? SameSets(candidate, result->defectives, result->inhibitors)
                           : candidate.defectives() == result->defectives)) {
          found = true;
        }
        if (candidate.defectives() != index->instances()[explanations.front()].defectives()) {
          unique = false;
        }
      }
      if (!found) ++tally_threshold.oracle_violations;
      if (!with_inhibitors && !unique) ++report.uniqueness_violations;
    };

    if (use_sampling(rows)) {
      report.sampled = true;
      std::mt19937_64 rng(options.seed);
      std::uniform_int_distribution<size_t> pick(0, instances.size() - 1);
      for (uint64_t k = 0; k < options.samples; ++k) {
        const size_t i = pick(rng);
        const OutcomeVector clean = Encode(scheme, instances[i]);
        const OutcomeVector noisy = InjectErrors(clean, e, ErrorStrategy::kUniform, rng());
        run(instances[i], noisy.bits, [&](const std::optional<DecodeResult>& result) {
          check_against(index->ExplainIndices(noisy.bits, e), result);
        });
      }
      return;
    }

    const unsigned max_flips = options.flip_mode == FlipMode::kNone ? 0 : e;
    for (size_t i = 0; i < instances.size(); ++i) {
      BitVector outcome = Encode(scheme, instances[i]).bits;
      std::vector<ExplanationIndex::Neighbour> near;
      if (index) {
        if (!(index->encoding(i) == outcome)) ++report.encoding_mismatches;
        near = index->Neighbours(i, 2 * max_flips);
      }
      for (unsigned w = 0; w <= max_flips; ++w) {
        ForEachCombination(0, rows - 1, w, [&](const std::vector<uint64_t>& flips) {
          for (uint64_t row : flips) outcome.Flip(row);
          run(instances[i], outcome, [&](const std::optional<DecodeResult>& result) {
            check_against(index->ExplainFlipped(i, near, flips, e), result);
          });
          for (uint64_t row : flips) outcome.Flip(row);
        });
      }
    }
  };

  sweep_scheme(defective_scheme, false);
  if (full) sweep_scheme(full_scheme, true);
  return report;
}

}  // namespace nagti
