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

#ifndef MPCALC_MATRIX_HPP_
#define MPCALC_MATRIX_HPP_

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "mpcalc/ring.hpp"

namespace mpcalc {

/// Dense exact matrix over a Ring. Zero-width and zero-height matrices are
/// legal values and act as identities for block composition.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix zero(const Ring& ring, std::size_t rows, std::size_t cols) {
    return Matrix(ring, rows, cols);
  }
  /// Convenience constructor from integer literals (canonicalized per ring).
  static Matrix from_ints(const Ring& ring,
                          std::initializer_list<std::initializer_list<long>> rows);
  static Matrix row_from_ints(const Ring& ring, std::initializer_list<long> row);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v) {
    e_[i * cols_ + j] = ring_.canonical(v);
  }

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;

  Matrix transpose() const;
  Matrix row(std::size_t i) const;
  Matrix col(std::size_t j) const;
  /// Columns [0, j) of this matrix.
  Matrix prefix_cols(std::size_t j) const;
  Matrix delete_col(std::size_t j) const;
  Matrix map_entries(const Ring& target, const std::function<Scalar(const Scalar&)>& f) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  /// `<rows>x<cols>[e11,e12,...;e21,...]`; bit-exact round trip with parse().
  std::string to_text() const;
  static Matrix parse(const Ring& ring, std::string_view text);
  /// Parses starting at `pos` inside a larger document; advances `pos`.
  static Matrix parse_prefix(const Ring& ring, std::string_view text, std::size_t& pos);

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// [[a, b], [c, d]] with consistent block dimensions.
Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

}  // namespace mpcalc

#endif  // MPCALC_MATRIX_HPP_
