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

#ifndef MPCALC_ERRORS_HPP_
#define MPCALC_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpcalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct RingMismatch : Error {
  using Error::Error;
};

struct NotAField : Error {
  using Error::Error;
};

struct NotEuclidean : Error {
  using Error::Error;
};

struct UnsupportedRing : Error {
  using Error::Error;
};

struct UnsupportedHom : Error {
  using Error::Error;
};

struct ChainMismatch : Error {
  using Error::Error;
};

struct ScaleCapExceeded : Error {
  using Error::Error;
};

struct UnverifiedCertificate : Error {
  using Error::Error;
};

// Carries the byte offset of the first offending character.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

}  // namespace mpcalc

#endif  // MPCALC_ERRORS_HPP_
