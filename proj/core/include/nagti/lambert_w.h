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

#ifndef NAGTI_LAMBERT_W_H_
#define NAGTI_LAMBERT_W_H_

namespace nagti {

// Principal branch W(x), the w with w * exp(w) = x, restricted to x >= e.
// Newton's method on w + ln(w) - ln(x) seeded at ln x - ln ln x; the result
// satisfies |w e^w - x| <= 1e-10 x. Throws DomainError for x < e or NaN.
double LambertW(double x);

}  // namespace nagti

#endif  // NAGTI_LAMBERT_W_H_
