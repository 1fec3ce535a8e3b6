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

#include "mpcalc/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "mpcalc/errors.hpp"

namespace mpcalc {

FullRrefResult rref_full(const Matrix& m) {
  if (!m.ring().is_field()) {
    throw NotAField("row reduction requires a field, got " + m.ring().to_string());
  }
  const Ring& ring = m.ring();
  Matrix r = m;
  Matrix p = Matrix::identity(ring, m.rows());
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t j = 0; j < m.cols() && lead < m.rows(); ++j) {
    // First nonzero entry in column order.
    std::size_t pivot_row = lead;
    while (pivot_row < m.rows() && ring.is_zero(r.at(pivot_row, j))) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != lead) {
      r.swap_rows(pivot_row, lead);
      p.swap_rows(pivot_row, lead);
    }
    Scalar scale = *ring.inv(r.at(lead, j));
    for (std::size_t c = 0; c < r.cols(); ++c) r.set(lead, c, ring.mul(r.at(lead, c), scale));
    for (std::size_t c = 0; c < p.cols(); ++c) p.set(lead, c, ring.mul(p.at(lead, c), scale));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || ring.is_zero(r.at(i, j))) continue;
      Scalar factor = r.at(i, j);
      for (std::size_t c = 0; c < r.cols(); ++c)
        r.set(i, c, ring.sub(r.at(i, c), ring.mul(factor, r.at(lead, c))));
      for (std::size_t c = 0; c < p.cols(); ++c)
        p.set(i, c, ring.sub(p.at(i, c), ring.mul(factor, p.at(lead, c))));
    }
    pivots.push_back(j);
    ++lead;
  }
  return FullRrefResult{std::move(r), std::move(p), pivots.size(), std::move(pivots)};
}

RrefResult rref(const Matrix& m) {
  FullRrefResult full = rref_full(m);
  Matrix r(m.ring(), full.rank, m.cols());
  Matrix p(m.ring(), full.rank, m.rows());
  for (std::size_t i = 0; i < full.rank; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, full.r.at(i, j));
    for (std::size_t j = 0; j < m.rows(); ++j) p.set(i, j, full.p.at(i, j));
  }
  return RrefResult{std::move(r), std::move(p), full.rank, std::move(full.pivot_cols)};
}

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat z_identity(std::size_t n) {
  ZMat m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix from_zmat(const Ring& ring, const ZMat& z, std::size_t rows, std::size_t cols) {
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, ring.canonical(Scalar(z[i][j])));
  return m;
}

// Smith normal form over Z by gcd elimination on arbitrary-precision values.
SnfResult snf_integers(const Matrix& input) {
  const Ring z = Ring::integers();
  std::size_t rows = input.rows(), cols = input.cols();
  ZMat d(rows, std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) d[i][j] = input.at(i, j).get_num();
  ZMat p = z_identity(rows);
  ZMat q = z_identity(cols);

  auto row_sub = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
    for (std::size_t c = 0; c < cols; ++c) d[dst][c] -= f * d[src][c];
    for (std::size_t c = 0; c < rows; ++c) p[dst][c] -= f * p[src][c];
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
    for (std::size_t r = 0; r < rows; ++r) d[r][dst] -= f * d[r][src];
    for (std::size_t r = 0; r < cols; ++r) q[r][dst] -= f * q[r][src];
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(d[a], d[b]);
    std::swap(p[a], p[b]);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(d[r][a], d[r][b]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(q[r][a], q[r][b]);
  };

  std::size_t t = 0;
  std::size_t bound = std::min(rows, cols);
  while (t < bound) {
    // Pivot: minimal absolute value among nonzero entries of the submatrix.
    std::size_t pi = t, pj = t;
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (d[i][j] == 0) continue;
        mpz_class a = abs(d[i][j]);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    }
    if (!found) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (d[i][t] == 0) continue;
      mpz_class f = d[i][t] / d[t][t];
      row_sub(i, t, f);
      if (d[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (d[t][j] == 0) continue;
      mpz_class f = d[t][j] / d[t][t];
      col_sub(j, t, f);
      if (d[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders exist, re-pick pivot

    // Pivot must divide the rest of the submatrix.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i) {
      for (std::size_t j = t + 1; j < cols && divides; ++j) {
        if (d[i][j] % d[t][t] != 0) {
          row_sub(t, i, mpz_class(-1));  // pull the offending row in
          divides = false;
        }
      }
    }
    if (!divides) continue;
    ++t;
  }
  for (std::size_t i = 0; i < bound; ++i) {
    if (d[i][i] < 0) {
      for (std::size_t c = 0; c < cols; ++c) d[i][c] = -d[i][c];
      for (std::size_t c = 0; c < rows; ++c) p[i][c] = -p[i][c];
    }
  }
  return SnfResult{from_zmat(z, d, rows, cols), from_zmat(z, p, rows, rows),
                   from_zmat(z, q, cols, cols)};
}

// Over a field the Smith form is diag(1,...,1,0,...): row-reduce, then clear
// and permute columns.
SnfResult snf_field(const Matrix& input) {
  const Ring& ring = input.ring();
  FullRrefResult fr = rref_full(input);
  Matrix r = fr.r;
  Matrix q = Matrix::identity(ring, input.cols());
  for (std::size_t i = 0; i < fr.rank; ++i) {
    std::size_t j = fr.pivot_cols[i];
    for (std::size_t c = 0; c < r.cols(); ++c) {
      if (c == j || ring.is_zero(r.at(i, c))) continue;
      bool c_is_pivot = std::find(fr.pivot_cols.begin(), fr.pivot_cols.end(), c) !=
                        fr.pivot_cols.end();
      if (c_is_pivot) continue;
      Scalar f = r.at(i, c);
      for (std::size_t t = 0; t < r.rows(); ++t)
        r.set(t, c, ring.sub(r.at(t, c), ring.mul(f, r.at(t, j))));
      for (std::size_t t = 0; t < q.rows(); ++t)
        q.set(t, c, ring.sub(q.at(t, c), ring.mul(f, q.at(t, j))));
    }
  }
  // Non-pivot columns are now zero; bring pivot columns to the diagonal.
  for (std::size_t i = 0; i < fr.rank; ++i) {
    std::size_t j = fr.pivot_cols[i];
    if (j != i) {
      r.swap_cols(i, j);
      q.swap_cols(i, j);
    }
  }
  return SnfResult{std::move(r), fr.p, std::move(q)};
}

}  // namespace

SnfResult smith_normal_form(const Matrix& m) {
  if (!m.ring().is_euclidean()) {
    throw NotEuclidean("Smith normal form requires a Euclidean ring, got " +
                       m.ring().to_string());
  }
  if (m.ring().kind() == RingKind::Integers) return snf_integers(m);
  return snf_field(m);
}

namespace {

std::optional<Matrix> solve_left_field(const Matrix& b, const Matrix& a) {
  const Ring& ring = b.ring();
  FullRrefResult fr = rref_full(b);
  Matrix rhs = fr.p * a;
  for (std::size_t i = fr.rank; i < rhs.rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      if (!ring.is_zero(rhs.at(i, j))) return std::nullopt;
  Matrix w(ring, b.cols(), a.cols());
  for (std::size_t i = 0; i < fr.rank; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) w.set(fr.pivot_cols[i], j, rhs.at(i, j));
  return w;
}

std::optional<Matrix> solve_left_integers(const Matrix& b, const Matrix& a) {
  const Ring& ring = b.ring();
  SnfResult snf = smith_normal_form(b);
  Matrix rhs = snf.p * a;
  std::size_t bound = std::min(b.rows(), b.cols());
  Matrix y(ring, b.cols(), a.cols());
  for (std::size_t i = 0; i < rhs.rows(); ++i) {
    Scalar d = i < bound ? snf.d.at(i, i) : ring.zero();
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      auto q = ring.divide(rhs.at(i, j), d);
      if (!q) return std::nullopt;
      if (i < bound) y.set(i, j, *q);
    }
  }
  return snf.q * y;
}

std::optional<Matrix> solve_left_mod(const Matrix& b, const Matrix& a) {
  const Ring& ring = b.ring();
  const Ring z = Ring::integers();
  auto lift = [&](const Matrix& m) {
    return m.map_entries(z, [](const Scalar& v) { return v; });
  };
  SnfResult snf = smith_normal_form(lift(b));
  Matrix rhs_z = snf.p * lift(a);
  auto reduce = [&](const Matrix& m) {
    return m.map_entries(ring, [&](const Scalar& v) { return ring.canonical(v); });
  };
  Matrix rhs = reduce(rhs_z);
  std::size_t bound = std::min(b.rows(), b.cols());
  Matrix y(ring, b.cols(), a.cols());
  for (std::size_t i = 0; i < rhs.rows(); ++i) {
    Scalar d = i < bound ? ring.canonical(snf.d.at(i, i)) : ring.zero();
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      auto q = ring.divide(rhs.at(i, j), d);
      if (!q) return std::nullopt;
      if (i < bound) y.set(i, j, *q);
    }
  }
  return reduce(snf.q) * y;
}

}  // namespace

std::optional<Matrix> solve_left(const Matrix& b, const Matrix& a) {
  if (b.ring() != a.ring()) throw RingMismatch("solve_left over different rings");
  if (b.rows() != a.rows()) {
    throw DimensionMismatch("solve_left: " + std::to_string(b.rows()) + " rows vs " +
                            std::to_string(a.rows()));
  }
  switch (b.ring().kind()) {
    case RingKind::PrimeField:
    case RingKind::Rationals:
      return solve_left_field(b, a);
    case RingKind::Integers:
      return solve_left_integers(b, a);
    case RingKind::ModRing:
      return solve_left_mod(b, a);
  }
  throw UnsupportedRing("solve_left: unsupported ring");
}

Matrix generalized_inverse(const Matrix& b) {
  if (!b.ring().is_field()) {
    throw NotAField("generalized inverse requires a field, got " + b.ring().to_string());
  }
  RrefResult rr = rref(b);
  // b = (pivot columns of b) * rr.r, so r_right * rr.p is a reflexive-enough
  // inner inverse: b * c * b = b.
  Matrix r_right(b.ring(), b.cols(), rr.rank);
  for (std::size_t i = 0; i < rr.rank; ++i) r_right.set(rr.pivot_cols[i], i, b.ring().one());
  return r_right * rr.p;
}

namespace {

mpz_class det_bareiss(ZMat m, std::size_t n) {
  if (n == 0) return 1;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const Ring& ring = m.ring();
  if (ring.is_field()) {
    Matrix r = m;
    Scalar det = ring.one();
    for (std::size_t k = 0; k < r.rows(); ++k) {
      std::size_t piv = k;
      while (piv < r.rows() && ring.is_zero(r.at(piv, k))) ++piv;
      if (piv == r.rows()) return ring.zero();
      if (piv != k) {
        r.swap_rows(piv, k);
        det = ring.neg(det);
      }
      det = ring.mul(det, r.at(k, k));
      Scalar inv = *ring.inv(r.at(k, k));
      for (std::size_t i = k + 1; i < r.rows(); ++i) {
        Scalar f = ring.mul(r.at(i, k), inv);
        for (std::size_t j = k; j < r.cols(); ++j)
          r.set(i, j, ring.sub(r.at(i, j), ring.mul(f, r.at(k, j))));
      }
    }
    return det;
  }
  ZMat z(m.rows(), std::vector<mpz_class>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) z[i][j] = m.at(i, j).get_num();
  return ring.canonical(Scalar(det_bareiss(std::move(z), m.rows())));
}

Matrix left_kernel(const Matrix& m) {
  if (!m.ring().is_euclidean()) {
    throw NotEuclidean("left kernel requires a Euclidean ring");
  }
  SnfResult snf = smith_normal_form(m);
  std::size_t bound = std::min(m.rows(), m.cols());
  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i >= bound || m.ring().is_zero(snf.d.at(i, i))) free_rows.push_back(i);
  }
  Matrix k(m.ring(), free_rows.size(), m.rows());
  for (std::size_t out = 0; out < free_rows.size(); ++out)
    for (std::size_t j = 0; j < m.rows(); ++j) k.set(out, j, snf.p.at(free_rows[out], j));
  return k;
}

}  // namespace mpcalc
