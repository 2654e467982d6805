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

#include "nagti/lambert_w.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nagti/errors.h"

namespace nagti {

double LambertW(double x) {
  if (!(x >= std::numbers::e)) {
    throw DomainError("LambertW is defined here for x >= e, got " + std::to_string(x));
  }
  if (std::isinf(x)) throw DomainError("LambertW of infinity");

  const double log_x = std::log(x);
  double w = log_x - std::log(log_x);
  for (int iter = 0; iter < 64; ++iter) {
    const double step = (w + std::log(w) - log_x) * w / (w + 1.0);
    w -= step;
    if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * w) break;
  }
  return w;
}

}  // namespace nagti
