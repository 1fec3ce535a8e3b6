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

#ifndef MPCALC_GROTHENDIECK_HPP_
#define MPCALC_GROTHENDIECK_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mpcalc/formal_sum.hpp"
#include "mpcalc/pair.hpp"

namespace mpcalc {

/// Isomorphism invariant of the finitely presented module coker(R^m -> R^n)
/// presented by an m x n matrix acting on row vectors; columns index module
/// generators. Over a field this is the dimension; over Z the free rank plus
/// the invariant-factor chain.
struct ModuleInvariant {
  std::size_t free_rank = 0;
  std::vector<mpz_class> invariant_factors;  // each >= 2, d_i | d_{i+1}

  bool operator==(const ModuleInvariant& o) const {
    return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
  }
  std::string to_string() const;
};

ModuleInvariant module_invariant(const Matrix& a);  // field or Z

/// Presentation equivalence: the four row/column moves preserve and classify
/// it over the supported rings, so this is invariant equality.
bool lickorish_equivalent(const Matrix& a, const Matrix& b);

// Generator keys are self-describing serializations: "<ring>:<matrix>" and
// "<ring>:<pair>". These parse back bit-exactly.
std::string matrix_key(const Matrix& m);
Matrix parse_matrix_key(const std::string& key);
std::string pair_key(const MatrixPair& p);
MatrixPair parse_pair_key(const std::string& key);

/// [B | A] |-> {(B A)} - {B}, as a sum over matrix keys. On a system this
/// telescopes to {A}.
FormalSum gamma(const MatrixPair& p);

/// {A} |-> sum of prefix-column pairs [A_1..A_{i-1} | A_i] over pair keys.
FormalSum kappa(const Matrix& a);

/// Identity embedding of unary-pair sums; the triangle's third edge.
inline const FormalSum& iota(const FormalSum& x) { return x; }

/// Collapses matrix keys to indecomposable summands (field: the simple
/// module; Z: the free generator and the primary cyclics from CRT-splitting
/// the invariant factors). Equality after collapse is equality in the
/// Grothendieck group of the split-exact structure.
FormalSum collapse_to_k0(const FormalSum& matrix_key_sum);

/// Checks that following the three morphisms once around the triangle is the
/// identity on the class of `a`, after collapse.
bool triangle_check(const Matrix& a);

/// Equality of two unary-pair sums, decided by transporting through the
/// triangle isomorphisms and comparing collapsed values.
bool g0_equal(const FormalSum& x, const FormalSum& y);

/// {A} - {[A 0; B C]} + {C}: the generating shape of the positive cone.
FormalSum positive_cone_element(const Matrix& a, const Matrix& b, const Matrix& c);

/// Linear extension of rho{A} = cols - rank over a field / free rank over Z.
std::int64_t dim_character(const FormalSum& matrix_key_sum);

}  // namespace mpcalc

#endif  // MPCALC_GROTHENDIECK_HPP_
