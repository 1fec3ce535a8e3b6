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

#ifndef MPCALC_PAIR_HPP_
#define MPCALC_PAIR_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpcalc/linalg.hpp"
#include "mpcalc/matrix.hpp"

namespace mpcalc {

/// A matrix pair (B | A): B is m x k, A is m x n, over a shared ring. Read as
/// the proposition "B divides A on the left"; the arity is n. A pair with a
/// width-0 left matrix is a homogeneous system of linear equations.
class MatrixPair {
 public:
  MatrixPair(Matrix b, Matrix a);

  /// (| A): a system, with the left matrix stored at width 0.
  static MatrixPair system(Matrix a);
  /// Maximum class 1_n: the empty system with no equations.
  static MatrixPair top(const Ring& ring, std::size_t arity);
  /// Minimum class 0_n, represented by the system (| I_n).
  static MatrixPair bottom(const Ring& ring, std::size_t arity);

  const Matrix& b() const { return b_; }
  const Matrix& a() const { return a_; }
  const Ring& ring() const { return a_.ring(); }
  std::size_t rows() const { return a_.rows(); }
  std::size_t b_width() const { return b_.cols(); }
  std::size_t arity() const { return a_.cols(); }
  bool is_system() const { return b_.cols() == 0; }

  bool operator==(const MatrixPair& o) const { return b_ == o.b_ && a_ == o.a_; }
  bool operator!=(const MatrixPair& o) const { return !(*this == o); }

  /// Drops zero columns of B; a pair whose B vanishes becomes a system.
  MatrixPair normalized_b() const;

  /// `[<B>|<A>]`, or `[|<A>]` for systems.
  std::string to_text() const;
  static MatrixPair parse(const Ring& ring, std::string_view text);

 private:
  Matrix b_, a_;
};

/// Witness (U, V, G) for (B | A) <= (B' | A'): U B = B' V and U A = A' + B' G.
struct Certificate {
  Matrix u, v, g;

  /// `<U>;<V>;<G>`.
  std::string to_text() const;
  static Certificate parse(const Ring& ring, std::string_view text);
};

/// True iff both defining equations hold entrywise. Shape incompatibility is
/// a DimensionMismatch, reported distinctly from a failed verification.
bool verify(const Certificate& cert, const MatrixPair& src, const MatrixPair& dst);

struct CertifiedRelation {
  MatrixPair source;
  MatrixPair target;
  Certificate cert;
};

/// source <= source with the trivial witness.
CertifiedRelation identity_relation(const MatrixPair& p);

// The three divisibility rewriting moves; each returns the rewritten pair
// and the witness from the generating rule.
CertifiedRelation rod_left_multiply(const MatrixPair& p, const Matrix& u);   // p <= (UB | UA)
CertifiedRelation rod_right_multiply(const MatrixPair& p, const Matrix& v);  // (BV | A) <= p
CertifiedRelation rod_translate(const MatrixPair& p, const Matrix& g);       // (B | A+BG) <= p

/// Transitivity: requires first.target == second.source exactly.
CertifiedRelation compose(const CertifiedRelation& first, const CertifiedRelation& second);

/// Splits an arbitrary certified relation into the three-move chain
/// (B|A) <= (UB|UA) = (B'V | A'+B'G) <= (B' | A'+B'G) <= (B' | A').
std::array<CertifiedRelation, 3> decompose(const CertifiedRelation& rel);

/// Infimum [B 0 | A; 0 B' | A'] plus the two certified projections.
struct MeetResult {
  MatrixPair pair;
  CertifiedRelation below_left;   // meet <= p
  CertifiedRelation below_right;  // meet <= q
};

MeetResult meet(const MatrixPair& p, const MatrixPair& q);

/// Supremum, computed from the explicit three-block-row presentation.
MatrixPair join(const MatrixPair& p, const MatrixPair& q);

/// [B^t 0; A^t I_n]. An anti-isomorphism on classes; over the commutative
/// rings supported here the opposite ring is the ring itself.
MatrixPair dual(const MatrixPair& p);

/// W with B W = A iff [p] is the maximum class.
std::optional<Matrix> is_top(const MatrixPair& p);

/// U with U B = 0 and U A = I_n iff [p] is the minimum class.
std::optional<Matrix> is_bottom(const MatrixPair& p);

/// Field reduction of p to an equivalent canonical system, with certified
/// inequalities in both directions.
struct SystemForm {
  Matrix coeffs;                  // row-reduced, zero rows deleted
  CertifiedRelation into_system;  // p <= (| coeffs)
  CertifiedRelation from_system;  // (| coeffs) <= p
};

SystemForm to_system(const MatrixPair& p);  // throws NotAField

/// The unique row-reduced coefficient matrix representing [p] over a field.
/// The empty 0 x n matrix is the maximum class, I_n the minimum.
Matrix canonical_form(const MatrixPair& p);

enum class LeqStatus { Proved, Disproved, Unknown };

struct LeqResult {
  LeqStatus status = LeqStatus::Unknown;
  std::optional<Certificate> cert;  // present iff Proved
};

/// Decides [p] <= [q]. Fields reduce to row-space containment of the
/// canonical systems. Over Z and Z/n the witness equations are solved
/// directly as a linear system in the entries of (U, V, G), which decides
/// the relation outright for these rings.
LeqResult decide_leq(const MatrixPair& p, const MatrixPair& q);

/// Diagonalizes B over a Euclidean ring and splits p into scalar-left
/// pairs [d_i | row_i] whose infimum is [p]. Rows past the diagonal get 0.
std::vector<std::pair<Scalar, Matrix>> pid_reduce(const MatrixPair& p);

/// Entrywise ring morphism. Supported: identity on any ring, Z -> Z/n,
/// Z -> F_p, and Z/n -> Z/m with m | n.
class RingHom {
 public:
  static RingHom make(const Ring& from, const Ring& to);  // throws UnsupportedHom
  static RingHom identity(const Ring& ring) { return make(ring, ring); }

  const Ring& from() const { return from_; }
  const Ring& to() const { return to_; }
  Scalar map(const Scalar& v) const { return to_.canonical(v); }
  Matrix map(const Matrix& m) const;

 private:
  RingHom(Ring from, Ring to) : from_(std::move(from)), to_(std::move(to)) {}
  Ring from_, to_;
};

MatrixPair map_pair(const RingHom& f, const MatrixPair& p);
Certificate map_certificate(const RingHom& f, const Certificate& c);
CertifiedRelation map_relation(const RingHom& f, const CertifiedRelation& rel);

/// From a certificate for the system (A, A') <= (B | C', C'') in arity n+k,
/// builds the certificate for (A | A') <= (B, C' | C'') in arity k, where A
/// has n columns. `lead_cols` is n.
CertifiedRelation system_split(const CertifiedRelation& rel, std::size_t lead_cols);

}  // namespace mpcalc

#endif  // MPCALC_PAIR_HPP_
