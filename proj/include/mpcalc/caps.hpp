//  Copyright 2026 the mpcalc authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef MPCALC_CAPS_HPP_
#define MPCALC_CAPS_HPP_

namespace mpcalc {

/// Desk-scale limits for exhaustive procedures. Exceeding a cap raises
/// ScaleCapExceeded; nothing is ever truncated silently. The CLI lets the
/// environment raise these.
struct Caps {
  unsigned long max_q = 31;                 // largest prime field enumerated
  unsigned long max_arity = 3;              // largest enumerated arity
  unsigned long long eval_cap = 1'000'000;  // largest brute-force tuple count
};

}  // namespace mpcalc

#endif  // MPCALC_CAPS_HPP_
