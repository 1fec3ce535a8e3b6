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

#include "mpcalc/gen.hpp"

#include <algorithm>

namespace mpcalc {

std::size_t Gen::index(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(eng_);
}

long Gen::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(eng_);
}

Scalar Gen::scalar(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::PrimeField:
    case RingKind::ModRing:
      return ring.from_int(integer(0, static_cast<long>(ring.modulus()) - 1));
    case RingKind::Integers:
      return ring.from_int(integer(-9, 9));
    case RingKind::Rationals: {
      long num = integer(-9, 9);
      long den = integer(1, 9);
      Scalar v(num, den);
      v.canonicalize();
      return ring.canonical(v);
    }
  }
  return ring.zero();
}

Matrix Gen::matrix(const Ring& ring, std::size_t rows, std::size_t cols) {
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, scalar(ring));
  return m;
}

Matrix Gen::invertible(const Ring& ring, std::size_t n) {
  Matrix m = Matrix::identity(ring, n);
  if (n == 0) return m;
  std::size_t ops = 2 * n + 2;
  for (std::size_t t = 0; t < ops; ++t) {
    std::size_t i = index(n), j = index(n);
    switch (index(3)) {
      case 0:
        if (i != j) m.swap_rows(i, j);
        break;
      case 1: {  // row_i += c * row_j
        if (i == j) break;
        Scalar c = ring.from_int(integer(-3, 3));
        for (std::size_t k = 0; k < n; ++k)
          m.set(i, k, ring.add(m.at(i, k), ring.mul(c, m.at(j, k))));
        break;
      }
      case 2: {  // scale by a unit
        Scalar u = ring.one();
        if (ring.is_field()) {
          do {
            u = scalar(ring);
          } while (ring.is_zero(u));
        } else if (index(2) == 0) {
          u = ring.neg(u);
        }
        for (std::size_t k = 0; k < n; ++k) m.set(i, k, ring.mul(u, m.at(i, k)));
        break;
      }
    }
  }
  return m;
}

MatrixPair Gen::pair(const Ring& ring, std::size_t arity, std::size_t max_rows,
                     std::size_t max_b_width) {
  std::size_t rows = 1 + index(max_rows);
  std::size_t width = index(max_b_width + 1);  // width 0 gives a system
  return MatrixPair(matrix(ring, rows, width), matrix(ring, rows, arity));
}

CertifiedRelation Gen::chain_up(const MatrixPair& start, std::size_t steps, std::size_t max_dim,
                                std::size_t max_side) {
  return chain_impl(start, steps, max_dim, max_side, true);
}

CertifiedRelation Gen::chain(const MatrixPair& start, std::size_t steps, std::size_t max_dim,
                             std::size_t max_side) {
  return chain_impl(start, steps, max_dim, max_side, false);
}

CertifiedRelation Gen::chain_impl(const MatrixPair& start, std::size_t steps, std::size_t max_dim,
                                  std::size_t max_side, bool up_only) {
  const Ring& ring = start.ring();
  CertifiedRelation rel = identity_relation(start);
  for (std::size_t t = 0; t < steps; ++t) {
    const MatrixPair& src = rel.source;
    const MatrixPair& dst = rel.target;
    switch (index(up_only ? 3 : 6)) {
      case 0: {  // target <= (U target)
        std::size_t rows = 1 + index(std::min(max_dim, max_side));
        rel = compose(rel, rod_left_multiply(dst, matrix(ring, rows, dst.rows())));
        break;
      }
      case 1: {  // target <= (B | A + BG), undone by translating back
        Matrix g = matrix(ring, dst.b_width(), dst.arity());
        MatrixPair above(dst.b(), dst.a() + dst.b() * g);
        rel = compose(rel, rod_translate(above, -g));
        break;
      }
      case 2: {  // target <= (B, B' | A)
        if (dst.b_width() >= max_side) break;
        std::size_t extra = 1 + index(std::min(max_dim, max_side - dst.b_width()));
        MatrixPair above(hstack(dst.b(), matrix(ring, dst.rows(), extra)), dst.a());
        Matrix v = vstack(Matrix::identity(ring, dst.b_width()),
                          Matrix::zero(ring, extra, dst.b_width()));
        rel = compose(rel, rod_right_multiply(above, v));
        break;
      }
      case 3: {  // (source V) <= source
        std::size_t width = index(std::min(max_dim, max_side) + 1);
        rel = compose(rod_right_multiply(src, matrix(ring, src.b_width(), width)), rel);
        break;
      }
      case 4: {  // (B | A + BG) <= source
        rel = compose(rod_translate(src, matrix(ring, src.b_width(), src.arity())), rel);
        break;
      }
      case 5: {  // stacked pair <= source
        if (src.rows() >= max_side) break;
        std::size_t extra = 1 + index(std::min(max_dim, max_side - src.rows()));
        MatrixPair below(vstack(src.b(), matrix(ring, extra, src.b_width())),
                         vstack(src.a(), matrix(ring, extra, src.arity())));
        Matrix u = hstack(Matrix::identity(ring, src.rows()),
                          Matrix::zero(ring, src.rows(), extra));
        rel = compose(rod_left_multiply(below, u), rel);
        break;
      }
    }
  }
  return rel;
}

}  // namespace mpcalc
