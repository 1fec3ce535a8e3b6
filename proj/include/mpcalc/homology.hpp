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

#ifndef MPCALC_HOMOLOGY_HPP_
#define MPCALC_HOMOLOGY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "mpcalc/caps.hpp"
#include "mpcalc/pair.hpp"

namespace mpcalc {

/// One class of L_arity(F_q): the canonical row-reduced coefficient matrix
/// of its system representative (zero rows deleted). The empty matrix is the
/// maximum class, the identity the minimum.
struct ClassKey {
  Ring field;
  std::size_t arity;
  Matrix rref;

  bool operator==(const ClassKey& o) const {
    return field == o.field && arity == o.arity && rref == o.rref;
  }
  bool operator!=(const ClassKey& o) const { return !(*this == o); }
  bool operator<(const ClassKey& o) const;
  std::string to_text() const { return rref.to_text(); }
};

/// All classes of the given arity over F_q, sorted deterministically; one
/// per row-reduced echelon matrix, equivalently per subspace of F_q^arity.
std::vector<ClassKey> enumerate_classes(unsigned long q, std::size_t arity,
                                        const Caps& caps = {});

ClassKey class_of(const MatrixPair& p);  // field rings
inline MatrixPair pair_of(const ClassKey& c) { return MatrixPair::system(c.rref); }

/// Bottom i-face: delete column i of the representative and re-canonicalize.
ClassKey face_bottom(const ClassKey& c, std::size_t i);
/// Top i-face: absorb column i into the left matrix, then reduce to a system.
ClassKey face_top(const ClassKey& c, std::size_t i);

/// True iff some top and bottom i-face agree. Undefined for unary classes.
bool is_degenerate(const ClassKey& c);

/// Generators of the nondegenerate chain group C_n: nondegenerate classes of
/// arity n+1 (all classes for n = 0), in enumeration order.
std::vector<ClassKey> chain_basis(unsigned long q, std::size_t n, const Caps& caps = {});

/// Integer matrix of the boundary C_n -> C_{n-1} in the bases above; rows
/// index C_n generators. n = 0 yields the augmentation column of ones.
/// A face that lands on a degenerate class of arity >= 2 contributes 0.
Matrix boundary_matrix(unsigned long q, std::size_t n, const Caps& caps = {});

struct HomologyResult {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // >= 2 each, divisibility chain

  bool operator==(const HomologyResult& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  /// "0", "Z", "Z^2 (+) Z/2", "Z/6", ...
  std::string to_string() const;
};

/// H_n of the nondegenerate complex over F_q, n in {0, 1}, by integer Smith
/// reduction of the enumerated boundary matrices.
HomologyResult homology(unsigned long q, std::size_t n, const Caps& caps = {});

/// The abelian group on generators [1,r], r in F_q^x, modulo both boundary
/// relation families [1,r]-[1,s]-[1,s^-1 r] and [1,s]-[1,r]+[1,-r s^-1].
HomologyResult presentation_h1(unsigned long q, const Caps& caps = {});

/// Z^ambient modulo the row space of an integer relation matrix.
HomologyResult abelian_quotient(std::size_t ambient, const Matrix& relation_rows);

}  // namespace mpcalc

#endif  // MPCALC_HOMOLOGY_HPP_
