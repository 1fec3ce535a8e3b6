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

#include "mpcalc/homology.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <utility>

#include "mpcalc/errors.hpp"
#include "mpcalc/linalg.hpp"

namespace mpcalc {

bool ClassKey::operator<(const ClassKey& o) const {
  if (arity != o.arity) return arity < o.arity;
  if (rref.rows() != o.rref.rows()) return rref.rows() < o.rref.rows();
  for (std::size_t i = 0; i < rref.rows(); ++i) {
    for (std::size_t j = 0; j < rref.cols(); ++j) {
      if (rref.at(i, j) != o.rref.at(i, j)) return rref.at(i, j) < o.rref.at(i, j);
    }
  }
  return false;
}

std::vector<ClassKey> enumerate_classes(unsigned long q, std::size_t arity, const Caps& caps) {
  if (q > caps.max_q) {
    throw ScaleCapExceeded("field size " + std::to_string(q) + " exceeds cap " +
                           std::to_string(caps.max_q));
  }
  if (arity > caps.max_arity) {
    throw ScaleCapExceeded("arity " + std::to_string(arity) + " exceeds cap " +
                           std::to_string(caps.max_arity));
  }
  Ring field = Ring::prime_field(q);
  std::vector<ClassKey> out;
  // Every class is a unique RREF with `arity` columns: choose pivot columns,
  // then fill the free positions (right of a pivot, in non-pivot columns).
  for (std::size_t rank = 0; rank <= arity; ++rank) {
    std::vector<std::size_t> pivots(rank);
    // Iterate over rank-subsets of {0..arity-1} in lexicographic order.
    for (std::size_t i = 0; i < rank; ++i) pivots[i] = i;
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;
      for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t c = pivots[i] + 1; c < arity; ++c) {
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
            free_pos.emplace_back(i, c);
          }
        }
      }
      std::vector<unsigned long> fill(free_pos.size(), 0);
      while (true) {
        Matrix m(field, rank, arity);
        for (std::size_t i = 0; i < rank; ++i) m.set(i, pivots[i], field.one());
        for (std::size_t t = 0; t < free_pos.size(); ++t) {
          m.set(free_pos[t].first, free_pos[t].second,
                field.from_int(static_cast<long>(fill[t])));
        }
        out.push_back(ClassKey{field, arity, std::move(m)});
        std::size_t carry = 0;
        while (carry < fill.size()) {
          if (++fill[carry] < q) break;
          fill[carry] = 0;
          ++carry;
        }
        if (carry == fill.size()) break;
      }
      if (rank == 0) break;
      // next combination
      std::size_t i = rank;
      while (i > 0) {
        --i;
        if (pivots[i] + (rank - i) < arity) {
          ++pivots[i];
          for (std::size_t j = i + 1; j < rank; ++j) pivots[j] = pivots[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = rank;  // exhausted
          break;
        }
      }
      if (i == rank) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassKey class_of(const MatrixPair& p) {
  Matrix r = canonical_form(p);
  return ClassKey{p.ring(), p.arity(), std::move(r)};
}

ClassKey face_bottom(const ClassKey& c, std::size_t i) {
  if (i >= c.arity) throw DimensionMismatch("face index out of range");
  Matrix dropped = c.rref.delete_col(i);
  return ClassKey{c.field, c.arity - 1, rref(dropped).r};
}

ClassKey face_top(const ClassKey& c, std::size_t i) {
  if (i >= c.arity) throw DimensionMismatch("face index out of range");
  MatrixPair absorbed(c.rref.col(i), c.rref.delete_col(i));
  return class_of(absorbed);
}

bool is_degenerate(const ClassKey& c) {
  if (c.arity < 2) throw Error("degeneracy is undefined for unary classes");
  for (std::size_t i = 0; i < c.arity; ++i) {
    if (face_top(c, i) == face_bottom(c, i)) return true;
  }
  return false;
}

std::vector<ClassKey> chain_basis(unsigned long q, std::size_t n, const Caps& caps) {
  std::vector<ClassKey> all = enumerate_classes(q, n + 1, caps);
  if (n == 0) return all;
  std::vector<ClassKey> out;
  for (auto& c : all) {
    if (!is_degenerate(c)) out.push_back(std::move(c));
  }
  return out;
}

Matrix boundary_matrix(unsigned long q, std::size_t n, const Caps& caps) {
  const Ring z = Ring::integers();
  if (n == 0) {
    std::vector<ClassKey> basis = chain_basis(q, 0, caps);
    Matrix eps(z, basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) eps.set(i, 0, z.one());
    return eps;
  }
  if (n > 2) throw ScaleCapExceeded("boundary matrices are built for dimensions 0..2");
  std::vector<ClassKey> domain = chain_basis(q, n, caps);
  std::vector<ClassKey> codomain = chain_basis(q, n - 1, caps);
  std::map<ClassKey, std::size_t> index;
  for (std::size_t j = 0; j < codomain.size(); ++j) index.emplace(codomain[j], j);
  Matrix d(z, domain.size(), codomain.size());
  for (std::size_t row = 0; row < domain.size(); ++row) {
    for (std::size_t i = 0; i <= n; ++i) {
      long sign = (i % 2 == 0) ? 1 : -1;
      for (auto [face, coef] :
           {std::pair{face_top(domain[row], i), sign},
            std::pair{face_bottom(domain[row], i), -sign}}) {
        auto it = index.find(face);
        if (it == index.end()) continue;  // degenerate image, zero in C_{n-1}
        d.set(row, it->second, d.at(row, it->second) + Scalar(coef));
      }
    }
  }
  return d;
}

std::string HomologyResult::to_string() const {
  if (free_rank == 0 && torsion.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank == 1) {
    out << "Z";
    first = false;
  } else if (free_rank > 1) {
    out << "Z^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) out << " (+) ";
    out << "Z/" << d.get_str();
    first = false;
  }
  return out.str();
}

HomologyResult abelian_quotient(std::size_t ambient, const Matrix& relation_rows) {
  if (relation_rows.cols() != ambient) {
    throw DimensionMismatch("relation rows must have `ambient` columns");
  }
  SnfResult snf = smith_normal_form(relation_rows);
  std::size_t bound = std::min(relation_rows.rows(), relation_rows.cols());
  HomologyResult h;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < bound; ++i) {
    const Scalar& d = snf.d.at(i, i);
    if (sgn(d) == 0) continue;
    ++nonzero;
    if (d > 1) h.torsion.push_back(d.get_num());
  }
  h.free_rank = ambient - nonzero;
  return h;
}

HomologyResult homology(unsigned long q, std::size_t n, const Caps& caps) {
  if (n > 1) throw ScaleCapExceeded("homology is computed in dimensions 0 and 1");
  Matrix out_map = boundary_matrix(q, n, caps);        // C_n -> C_{n-1}
  Matrix in_map = boundary_matrix(q, n + 1, caps);     // C_{n+1} -> C_n
  Matrix kernel = left_kernel(out_map);                // cycle lattice basis rows
  // Boundaries lie in the cycle lattice; express them in its coordinates.
  auto x = solve_left(kernel.transpose(), in_map.transpose());
  if (!x) throw Error("internal: boundaries escaped the cycle lattice");
  return abelian_quotient(kernel.rows(), x->transpose());
}

HomologyResult presentation_h1(unsigned long q, const Caps& caps) {
  if (q > caps.max_q) {
    throw ScaleCapExceeded("field size " + std::to_string(q) + " exceeds cap");
  }
  Ring field = Ring::prime_field(q);
  const Ring z = Ring::integers();
  std::size_t units = q - 1;  // generators [1,r], r = 1..q-1
  auto index_of = [&](const Scalar& r) {
    return static_cast<std::size_t>(r.get_num().get_ui()) - 1;
  };
  std::vector<std::array<std::pair<std::size_t, long>, 3>> rows;
  for (unsigned long r = 1; r < q; ++r) {
    for (unsigned long s = 1; s < q; ++s) {
      Scalar rs = field.from_int(static_cast<long>(r));
      Scalar ss = field.from_int(static_cast<long>(s));
      Scalar s_inv_r = field.mul(*field.inv(ss), rs);
      Scalar neg_r_s_inv = field.neg(field.mul(rs, *field.inv(ss)));
      rows.push_back({std::pair{index_of(rs), 1L}, std::pair{index_of(ss), -1L},
                      std::pair{index_of(s_inv_r), -1L}});
      rows.push_back({std::pair{index_of(ss), 1L}, std::pair{index_of(rs), -1L},
                      std::pair{index_of(neg_r_s_inv), 1L}});
    }
  }
  Matrix rel(z, rows.size(), units);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [j, c] : rows[i]) rel.set(i, j, rel.at(i, j) + Scalar(c));
  }
  return abelian_quotient(units, rel);
}

}  // namespace mpcalc
