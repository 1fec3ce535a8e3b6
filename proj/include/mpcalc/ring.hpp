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

#ifndef MPCALC_RING_HPP_
#define MPCALC_RING_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "mpcalc/errors.hpp"

namespace mpcalc {

/// Exact ring element. Finite-ring residues are kept reduced to [0, n);
/// integers have denominator 1. The owning Ring maintains these invariants.
using Scalar = mpq_class;

enum class RingKind { PrimeField, Rationals, Integers, ModRing };

/// Descriptor of one of the supported commutative coefficient rings:
/// F_p (p prime), Q, Z, or Z/n (n >= 2). All element arithmetic is routed
/// through this class so that values stay in canonical form.
class Ring {
 public:
  static Ring prime_field(unsigned long p);  // throws Error if p is not prime
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  static Ring integers() { return Ring(RingKind::Integers, 0); }
  static Ring mod_ring(unsigned long n);  // throws Error if n < 2

  RingKind kind() const { return kind_; }
  /// Modulus of a finite ring; 0 for Q and Z.
  unsigned long modulus() const { return modulus_; }

  bool is_field() const {
    return kind_ == RingKind::PrimeField || kind_ == RingKind::Rationals;
  }
  bool is_euclidean() const { return kind_ != RingKind::ModRing; }
  bool is_finite() const {
    return kind_ == RingKind::PrimeField || kind_ == RingKind::ModRing;
  }

  bool operator==(const Ring& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  /// "Q", "Z", "F<p>", or "Z/<n>".
  std::string to_string() const;
  static Ring parse(std::string_view text);

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return canonical(Scalar(1)); }
  Scalar from_int(long v) const { return canonical(Scalar(v)); }

  /// Brings an arbitrary rational into the ring, reducing residues and
  /// rejecting non-integral values for Z and the finite rings.
  Scalar canonical(const Scalar& v) const;
  bool is_canonical(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return canonical(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return canonical(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return canonical(a * b); }
  Scalar neg(const Scalar& a) const { return canonical(-a); }

  /// Multiplicative inverse where one exists (fields: all nonzero; Z: +-1;
  /// Z/n: units).
  std::optional<Scalar> inv(const Scalar& a) const;

  /// Solves b * x = a for x, when a unique-enough witness exists. Used by
  /// elimination code; over Z this is exact division, over Z/n a congruence.
  std::optional<Scalar> divide(const Scalar& a, const Scalar& b) const;

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }

 private:
  Ring(RingKind kind, unsigned long modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  unsigned long modulus_;
};

std::string scalar_to_string(const Scalar& v);

/// Parses a decimal integer or "a/b" rational and canonicalizes it into the
/// ring. `pos_base` offsets positions in error messages.
Scalar parse_scalar(const Ring& ring, std::string_view text, std::size_t pos_base = 0);

}  // namespace mpcalc

#endif  // MPCALC_RING_HPP_
