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

#ifndef MPCALC_LINALG_HPP_
#define MPCALC_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "mpcalc/matrix.hpp"

namespace mpcalc {

/// r = p * input, in reduced row-echelon form with zero rows deleted.
/// p consists of the first `rank` rows of an invertible transform, so the
/// equation holds exactly. Pivots are the first nonzero entries in column
/// order, which makes r the canonical representative of the row space.
struct RrefResult {
  Matrix r;
  Matrix p;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Matrix& m);  // throws NotAField

/// Full-transform variant: p is square m x m invertible, r has the original
/// row count with zero rows at the bottom.
struct FullRrefResult {
  Matrix r;
  Matrix p;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

FullRrefResult rref_full(const Matrix& m);

/// p * input * q = d with p, q invertible and d diagonal with d1 | d2 | ...
/// Over Z the diagonal is nonnegative.
struct SnfResult {
  Matrix d;
  Matrix p;
  Matrix q;
};

SnfResult smith_normal_form(const Matrix& m);  // throws NotEuclidean

/// Returns w with b * w = a when solvable, nullopt otherwise. Fields go
/// through row reduction, Z through the Smith normal form, Z/n through the
/// Smith normal form of the integer lift with per-entry congruences.
std::optional<Matrix> solve_left(const Matrix& b, const Matrix& a);

/// c with b * c * b = b, via full-rank factorization. Field rings only.
Matrix generalized_inverse(const Matrix& b);  // throws NotAField

/// Exact determinant of a square matrix (Bareiss over Z, pivot products over
/// fields, integer lift over Z/n).
Scalar determinant(const Matrix& m);

/// Basis of { x : x * m = 0 } as rows, over Z a basis of the full (saturated)
/// kernel lattice, over a field a vector-space basis.
Matrix left_kernel(const Matrix& m);

}  // namespace mpcalc

#endif  // MPCALC_LINALG_HPP_
