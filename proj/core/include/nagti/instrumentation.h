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

#ifndef NAGTI_INSTRUMENTATION_H_
#define NAGTI_INSTRUMENTATION_H_

#include <cstdint>

namespace nagti {

// Operation counts collected by the encoder and decoders. These are the
// hardware-independent cost figures reported next to wall-clock timings.
struct OpCounters {
  // Top-level matrix columns generated (encoder) or disjunct-code columns
  // generated (decoders).
  uint64_t column_generations = 0;
  // Outcome blocks whose contents were inspected.
  uint64_t blocks_examined = 0;
  // Suppressed-union inversions performed.
  uint64_t inversions = 0;
  // Distinct candidates that went through a sanitization check.
  uint64_t candidates_checked = 0;

  OpCounters& operator+=(const OpCounters& o) {
    column_generations += o.column_generations;
    blocks_examined += o.blocks_examined;
    inversions += o.inversions;
    candidates_checked += o.candidates_checked;
    return *this;
  }
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

}  // namespace nagti

#endif  // NAGTI_INSTRUMENTATION_H_
