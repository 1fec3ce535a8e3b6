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

#include "mpcalc/grothendieck.hpp"

#include <sstream>

#include "mpcalc/errors.hpp"

namespace mpcalc {

std::string ModuleInvariant::to_string() const {
  std::ostringstream out;
  out << "rank " << free_rank;
  if (!invariant_factors.empty()) {
    out << ", factors";
    for (const auto& d : invariant_factors) out << " " << d.get_str();
  }
  return out.str();
}

ModuleInvariant module_invariant(const Matrix& a) {
  const Ring& ring = a.ring();
  if (ring.is_field()) {
    ModuleInvariant inv;
    inv.free_rank = a.cols() - rref(a).rank;
    return inv;
  }
  if (ring.kind() == RingKind::Integers) {
    SnfResult snf = smith_normal_form(a);
    std::size_t bound = std::min(a.rows(), a.cols());
    ModuleInvariant inv;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < bound; ++i) {
      const Scalar& d = snf.d.at(i, i);
      if (ring.is_zero(d)) continue;
      ++nonzero;
      if (d > 1) inv.invariant_factors.push_back(d.get_num());
    }
    inv.free_rank = a.cols() - nonzero;
    return inv;
  }
  throw UnsupportedRing("module invariants are computed over fields and Z only, got " +
                        ring.to_string());
}

bool lickorish_equivalent(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) throw RingMismatch("presentation comparison over different rings");
  return module_invariant(a) == module_invariant(b);
}

std::string matrix_key(const Matrix& m) { return m.ring().to_string() + ":" + m.to_text(); }

namespace {

std::pair<Ring, std::string_view> split_key(const std::string& key) {
  std::size_t colon = key.find(':');
  if (colon == std::string::npos) throw ParseError("generator key needs \"<ring>:\" prefix", 0);
  Ring ring = Ring::parse(std::string_view(key).substr(0, colon));
  return {ring, std::string_view(key).substr(colon + 1)};
}

}  // namespace

Matrix parse_matrix_key(const std::string& key) {
  auto [ring, body] = split_key(key);
  return Matrix::parse(ring, body);
}

std::string pair_key(const MatrixPair& p) { return p.ring().to_string() + ":" + p.to_text(); }

MatrixPair parse_pair_key(const std::string& key) {
  auto [ring, body] = split_key(key);
  return MatrixPair::parse(ring, body);
}

FormalSum gamma(const MatrixPair& p) {
  FormalSum s;
  s.add(matrix_key(hstack(p.b(), p.a())), 1);
  s.add(matrix_key(p.b()), -1);
  return s;
}

FormalSum kappa(const Matrix& a) {
  FormalSum s;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    s.add(pair_key(MatrixPair(a.prefix_cols(i), a.col(i))), 1);
  }
  return s;
}

namespace {

std::vector<std::pair<mpz_class, unsigned long>> factorize(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned long>> out;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

FormalSum collapse_to_k0(const FormalSum& matrix_key_sum) {
  FormalSum out;
  for (const auto& [key, c] : matrix_key_sum.terms()) {
    Matrix m = parse_matrix_key(key);
    ModuleInvariant inv = module_invariant(m);
    std::string ring = m.ring().to_string();
    if (inv.free_rank > 0) {
      out.add(ring + "#free", c * static_cast<std::int64_t>(inv.free_rank));
    }
    for (const auto& d : inv.invariant_factors) {
      // Primary decomposition: Z/d splits into its p-power cyclic summands.
      for (const auto& [p, e] : factorize(d)) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        out.add(ring + "#Z/" + pe.get_str(), c);
      }
    }
  }
  return out;
}

bool triangle_check(const Matrix& a) {
  if (!a.ring().is_field() && a.ring().kind() != RingKind::Integers) {
    throw UnsupportedRing("triangle check runs over fields and Z only");
  }
  FormalSum around;
  FormalSum prefix_pairs = kappa(a);
  for (const auto& [key, c] : prefix_pairs.terms()) {
    around = around + gamma(parse_pair_key(key)).scaled(c);
  }
  return collapse_to_k0(iota(around)) ==
         collapse_to_k0(FormalSum::generator(matrix_key(a)));
}

bool g0_equal(const FormalSum& x, const FormalSum& y) {
  auto transport = [](const FormalSum& s) {
    FormalSum out;
    for (const auto& [key, c] : s.terms()) {
      MatrixPair p = parse_pair_key(key);
      if (p.arity() != 1) throw Error("g0_equal expects unary pair keys, got " + key);
      out = out + gamma(p).scaled(c);
    }
    return collapse_to_k0(out);
  };
  return transport(x) == transport(y);
}

FormalSum positive_cone_element(const Matrix& a, const Matrix& b, const Matrix& c) {
  if (a.cols() != b.cols()) throw DimensionMismatch("cone: A and B need equal column counts");
  if (b.rows() != c.rows()) throw DimensionMismatch("cone: B and C need equal row counts");
  Matrix block = block2x2(a, Matrix::zero(a.ring(), a.rows(), c.cols()), b, c);
  FormalSum s;
  s.add(matrix_key(a), 1);
  s.add(matrix_key(block), -1);
  s.add(matrix_key(c), 1);
  return s;
}

std::int64_t dim_character(const FormalSum& matrix_key_sum) {
  std::int64_t total = 0;
  for (const auto& [key, c] : matrix_key_sum.terms()) {
    Matrix m = parse_matrix_key(key);
    ModuleInvariant inv = module_invariant(m);
    total += c * static_cast<std::int64_t>(inv.free_rank);
  }
  return total;
}

}  // namespace mpcalc
