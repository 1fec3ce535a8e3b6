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

#ifndef MPCALC_GEN_HPP_
#define MPCALC_GEN_HPP_

#include <cstdint>
#include <random>

#include "mpcalc/pair.hpp"

namespace mpcalc {

/// Deterministic instance generator for the randomized suites. mt19937_64 is
/// pinned by the standard, so a seed reproduces the same battery everywhere.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  static constexpr std::uint64_t kDefaultSeed = 12345;

  std::size_t index(std::size_t bound);  // uniform in [0, bound)
  long integer(long lo, long hi);

  /// Finite rings: uniform residue. Z: uniform in [-9, 9]. Q: small fraction.
  Scalar scalar(const Ring& ring);
  Matrix matrix(const Ring& ring, std::size_t rows, std::size_t cols);
  /// Product of random elementary row operations; unimodular over Z.
  Matrix invertible(const Ring& ring, std::size_t n);
  MatrixPair pair(const Ring& ring, std::size_t arity, std::size_t max_rows = 3,
                  std::size_t max_b_width = 3);

  /// Random chain of divisibility moves (all three rules, both directions),
  /// composed into one certified relation. `max_side` clamps the row count
  /// and left-matrix width of every pair along the chain.
  CertifiedRelation chain(const MatrixPair& start, std::size_t steps,
                          std::size_t max_dim = 3, std::size_t max_side = 6);

  /// Like chain(), but only rewrites upward, so the source stays `start`.
  CertifiedRelation chain_up(const MatrixPair& start, std::size_t steps,
                             std::size_t max_dim = 3, std::size_t max_side = 6);

  std::mt19937_64& engine() { return eng_; }

 private:
  CertifiedRelation chain_impl(const MatrixPair& start, std::size_t steps, std::size_t max_dim,
                               std::size_t max_side, bool up_only);

  std::mt19937_64 eng_;
};

}  // namespace mpcalc

#endif  // MPCALC_GEN_HPP_
