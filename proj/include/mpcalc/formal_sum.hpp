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

#ifndef MPCALC_FORMAL_SUM_HPP_
#define MPCALC_FORMAL_SUM_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "mpcalc/errors.hpp"

namespace mpcalc {

/// Element of the free abelian group on string generator keys. Zero
/// coefficients are never stored.
class FormalSum {
 public:
  FormalSum() = default;

  static FormalSum generator(const std::string& key) {
    FormalSum s;
    s.add(key, 1);
    return s;
  }

  void add(const std::string& key, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = coef_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coef_.erase(it);
    }
  }

  FormalSum operator+(const FormalSum& o) const {
    FormalSum r = *this;
    for (const auto& [k, c] : o.coef_) r.add(k, c);
    return r;
  }

  FormalSum operator-(const FormalSum& o) const {
    FormalSum r = *this;
    for (const auto& [k, c] : o.coef_) r.add(k, -c);
    return r;
  }

  FormalSum scaled(std::int64_t s) const {
    FormalSum r;
    if (s == 0) return r;
    for (const auto& [k, c] : coef_) r.add(k, c * s);
    return r;
  }

  const std::map<std::string, std::int64_t>& terms() const { return coef_; }
  bool is_zero() const { return coef_.empty(); }
  bool operator==(const FormalSum& o) const { return coef_ == o.coef_; }
  bool operator!=(const FormalSum& o) const { return !(*this == o); }

  /// Rewrites every generator through `f`, merging collisions.
  FormalSum map_keys(const std::function<std::string(const std::string&)>& f) const {
    FormalSum r;
    for (const auto& [k, c] : coef_) r.add(f(k), c);
    return r;
  }

  /// One `<coef> <key>` line per generator.
  std::string to_text() const {
    std::ostringstream out;
    for (const auto& [k, c] : coef_) out << c << " " << k << "\n";
    return out.str();
  }

  static FormalSum parse(std::string_view text) {
    FormalSum s;
    std::size_t line_start = 0;
    while (line_start < text.size()) {
      std::size_t line_end = text.find('\n', line_start);
      if (line_end == std::string_view::npos) line_end = text.size();
      std::string_view line = text.substr(line_start, line_end - line_start);
      line_start = line_end + 1;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
      while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      if (line.empty()) continue;
      std::size_t space = line.find(' ');
      if (space == std::string_view::npos) {
        throw ParseError("formal sum line needs \"<coef> <key>\"", line_start);
      }
      std::int64_t c = std::stoll(std::string(line.substr(0, space)));
      s.add(std::string(line.substr(space + 1)), c);
    }
    return s;
  }

 private:
  std::map<std::string, std::int64_t> coef_;
};

}  // namespace mpcalc

#endif  // MPCALC_FORMAL_SUM_HPP_
