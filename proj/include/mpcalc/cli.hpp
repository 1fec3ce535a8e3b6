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

#ifndef MPCALC_CLI_HPP_
#define MPCALC_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace mpcalc {

/// Full command dispatcher behind the `mpcalc` binary. Exit codes:
/// 0 success / Proved / true, 1 Disproved / false, 2 Unknown,
/// 3 usage or input error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpcalc

#endif  // MPCALC_CLI_HPP_
