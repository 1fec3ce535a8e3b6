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

#include "mpcalc/ring.hpp"

#include <cctype>

namespace mpcalc {

namespace {

bool is_prime(unsigned long p) {
  mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

}  // namespace

Ring Ring::prime_field(unsigned long p) {
  if (!is_prime(p)) {
    throw Error("F" + std::to_string(p) + ": " + std::to_string(p) + " is not prime");
  }
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::mod_ring(unsigned long n) {
  if (n < 2) {
    throw Error("Z/" + std::to_string(n) + ": modulus must be at least 2");
  }
  return Ring(RingKind::ModRing, n);
}

std::string Ring::to_string() const {
  switch (kind_) {
    case RingKind::PrimeField:
      return "F" + std::to_string(modulus_);
    case RingKind::Rationals:
      return "Q";
    case RingKind::Integers:
      return "Z";
    case RingKind::ModRing:
      return "Z/" + std::to_string(modulus_);
  }
  throw Error("corrupt ring kind");
}

Ring Ring::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text == "Z") return integers();
  if (text.size() >= 2 && text[0] == 'F') {
    unsigned long p = std::stoul(std::string(text.substr(1)));
    return prime_field(p);
  }
  if (text.size() >= 3 && text.substr(0, 2) == "Z/") {
    unsigned long n = std::stoul(std::string(text.substr(2)));
    return mod_ring(n);
  }
  throw Error("unrecognized ring \"" + std::string(text) + "\" (expected Q, Z, F<p>, or Z/<n>)");
}

Scalar Ring::canonical(const Scalar& v) const {
  switch (kind_) {
    case RingKind::Rationals: {
      Scalar c = v;
      c.canonicalize();
      return c;
    }
    case RingKind::Integers: {
      Scalar c = v;
      c.canonicalize();
      if (c.get_den() != 1) {
        throw Error("value " + scalar_to_string(c) + " is not an integer");
      }
      return c;
    }
    case RingKind::PrimeField:
    case RingKind::ModRing: {
      Scalar c = v;
      c.canonicalize();
      if (c.get_den() != 1) {
        // Fractions are admitted over F_p when the denominator is a unit.
        if (kind_ == RingKind::PrimeField) {
          Scalar den(c.get_den());
          auto dinv = inv(canonical(den));
          if (!dinv) throw Error("denominator not invertible in " + to_string());
          mpz_class num = c.get_num();
          return mul(canonical(Scalar(num)), *dinv);
        }
        throw Error("value " + scalar_to_string(c) + " is not an element of " + to_string());
      }
      mpz_class r;
      mpz_class n(modulus_);
      mpz_mod(r.get_mpz_t(), c.get_num().get_mpz_t(), n.get_mpz_t());
      return Scalar(r);
    }
  }
  throw Error("corrupt ring kind");
}

bool Ring::is_canonical(const Scalar& v) const {
  switch (kind_) {
    case RingKind::Rationals:
      return true;
    case RingKind::Integers:
      return v.get_den() == 1;
    case RingKind::PrimeField:
    case RingKind::ModRing:
      return v.get_den() == 1 && sgn(v) >= 0 && v.get_num() < modulus_;
  }
  return false;
}

std::optional<Scalar> Ring::inv(const Scalar& a) const {
  if (is_zero(a)) return std::nullopt;
  switch (kind_) {
    case RingKind::Rationals:
      return canonical(1 / a);
    case RingKind::Integers:
      if (a == 1 || a == -1) return a;
      return std::nullopt;
    case RingKind::PrimeField:
    case RingKind::ModRing: {
      mpz_class r;
      mpz_class n(modulus_);
      if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), n.get_mpz_t()) == 0) {
        return std::nullopt;
      }
      return Scalar(r);
    }
  }
  return std::nullopt;
}

std::optional<Scalar> Ring::divide(const Scalar& a, const Scalar& b) const {
  if (is_zero(b)) {
    if (is_zero(a)) return zero();
    return std::nullopt;
  }
  switch (kind_) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return mul(a, *inv(b));
    case RingKind::Integers: {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
      if (r != 0) return std::nullopt;
      return Scalar(q);
    }
    case RingKind::ModRing: {
      // b*x = a (mod n) is solvable iff gcd(b,n) | a.
      mpz_class n(modulus_);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), b.get_num().get_mpz_t(), n.get_mpz_t());
      mpz_class rem;
      mpz_mod(rem.get_mpz_t(), a.get_num().get_mpz_t(), g.get_mpz_t());
      if (rem != 0) return std::nullopt;
      mpz_class n1 = n / g;
      mpz_class b1 = b.get_num() / g;
      mpz_class a1 = a.get_num() / g;
      mpz_class binv;
      if (n1 == 1) return zero();
      if (mpz_invert(binv.get_mpz_t(), b1.get_mpz_t(), n1.get_mpz_t()) == 0) {
        return std::nullopt;
      }
      mpz_class x;
      x = a1 * binv;
      mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n1.get_mpz_t());
      return canonical(Scalar(x));
    }
  }
  return std::nullopt;
}

std::string scalar_to_string(const Scalar& v) { return v.get_str(); }

Scalar parse_scalar(const Ring& ring, std::string_view text, std::size_t pos_base) {
  if (text.empty()) throw ParseError("empty scalar", pos_base);
  std::size_t i = 0;
  auto scan_int = [&](const char* what) {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0) throw ParseError(std::string("expected ") + what, pos_base + i);
    return std::string(text.substr(start, i - start));
  };
  std::string num = scan_int("integer");
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = scan_int("denominator");
  }
  if (i != text.size()) throw ParseError("trailing characters in scalar", pos_base + i);
  mpz_class num_z(num), den_z(den);
  Scalar v(num_z, den_z);
  v.canonicalize();
  try {
    return ring.canonical(v);
  } catch (const Error& e) {
    throw ParseError(e.what(), pos_base);
  }
}

}  // namespace mpcalc
