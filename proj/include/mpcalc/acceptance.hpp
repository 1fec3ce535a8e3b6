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

#ifndef MPCALC_ACCEPTANCE_HPP_
#define MPCALC_ACCEPTANCE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mpcalc::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full reproducibility battery. `quick` shrinks the randomized
/// sample sizes; the exhaustive checks always run in full.
std::vector<CriterionResult> run_battery(std::uint64_t seed, bool quick);

/// Prints one [PASS]/[FAIL] line per criterion; returns true iff all passed.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace mpcalc::acceptance

#endif  // MPCALC_ACCEPTANCE_HPP_
