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

#include "mpcalc/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "mpcalc/errors.hpp"

namespace mpcalc {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring.one());
  return m;
}

Matrix Matrix::from_ints(const Ring& ring,
                         std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(ring, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged initializer rows");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, ring.from_int(v));
    ++i;
  }
  return m;
}

Matrix Matrix::row_from_ints(const Ring& ring, std::initializer_list<long> row) {
  Matrix m(ring, 1, row.size());
  std::size_t j = 0;
  for (long v : row) m.set(0, j++, ring.from_int(v));
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [&](const Scalar& v) { return sgn(v) == 0; });
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (ring_ != o.ring_) throw RingMismatch("matrix product over different rings");
  if (cols_ != o.rows_) {
    throw DimensionMismatch("product of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " by " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  Matrix r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Scalar acc(0);
      for (std::size_t t = 0; t < cols_; ++t) acc += at(i, t) * o.at(t, j);
      r.set(i, j, acc);
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (ring_ != o.ring_) throw RingMismatch("matrix sum over different rings");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  Matrix r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = ring_.add(e_[i], o.e_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = ring_.neg(e_[i]);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

Matrix Matrix::row(std::size_t i) const {
  Matrix r(ring_, 1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.set(0, j, at(i, j));
  return r;
}

Matrix Matrix::col(std::size_t j) const {
  Matrix r(ring_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) r.set(i, 0, at(i, j));
  return r;
}

Matrix Matrix::prefix_cols(std::size_t j) const {
  Matrix r(ring_, rows_, j);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t c = 0; c < j; ++c) r.set(i, c, at(i, c));
  return r;
}

Matrix Matrix::delete_col(std::size_t j) const {
  if (j >= cols_) throw DimensionMismatch("delete_col index out of range");
  Matrix r(ring_, rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::size_t out = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c == j) continue;
      r.set(i, out++, at(i, c));
    }
  }
  return r;
}

Matrix Matrix::map_entries(const Ring& target,
                           const std::function<Scalar(const Scalar&)>& f) const {
  Matrix r(target, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, f(at(i, j)));
  return r;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < cols_; ++c) std::swap(e_[i * cols_ + c], e_[j * cols_ + c]);
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) std::swap(e_[r * cols_ + i], e_[r * cols_ + j]);
}

std::string Matrix::to_text() const {
  std::ostringstream out;
  out << rows_ << "x" << cols_ << "[";
  for (std::size_t i = 0; i < rows_ && cols_ > 0; ++i) {
    if (i > 0) out << ";";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out << ",";
      out << scalar_to_string(at(i, j));
    }
  }
  out << "]";
  return out.str();
}

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

std::size_t parse_count(std::string_view text, std::size_t& pos, const char* what) {
  skip_ws(text, pos);
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError(std::string("expected ") + what, start);
  return std::stoul(std::string(text.substr(start, pos - start)));
}

}  // namespace

Matrix Matrix::parse_prefix(const Ring& ring, std::string_view text, std::size_t& pos) {
  std::size_t rows = parse_count(text, pos, "row count");
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != 'x') throw ParseError("expected 'x' after row count", pos);
  ++pos;
  std::size_t cols = parse_count(text, pos, "column count");
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  ++pos;
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows && cols > 0; ++i) {
    if (i > 0) {
      skip_ws(text, pos);
      if (pos >= text.size() || text[pos] != ';') throw ParseError("expected ';' between rows", pos);
      ++pos;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (j > 0) {
        skip_ws(text, pos);
        if (pos >= text.size() || text[pos] != ',')
          throw ParseError("expected ',' between entries", pos);
        ++pos;
      }
      skip_ws(text, pos);
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '-' || text[pos] == '+' || text[pos] == '/')) {
        ++pos;
      }
      if (pos == start) throw ParseError("expected matrix entry", pos);
      m.set(i, j, parse_scalar(ring, text.substr(start, pos - start), start));
    }
  }
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", pos);
  ++pos;
  return m;
}

Matrix Matrix::parse(const Ring& ring, std::string_view text) {
  std::size_t pos = 0;
  Matrix m = parse_prefix(ring, text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters after matrix", pos);
  return m;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.ring() != right.ring()) throw RingMismatch("hstack over different rings");
  if (left.rows() != right.rows()) throw DimensionMismatch("hstack row counts differ");
  Matrix r(left.ring(), left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) r.set(i, j, left.at(i, j));
    for (std::size_t j = 0; j < right.cols(); ++j) r.set(i, left.cols() + j, right.at(i, j));
  }
  return r;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.ring() != bottom.ring()) throw RingMismatch("vstack over different rings");
  if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack column counts differ");
  Matrix r(top.ring(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t j = 0; j < r.cols(); ++j) {
    for (std::size_t i = 0; i < top.rows(); ++i) r.set(i, j, top.at(i, j));
    for (std::size_t i = 0; i < bottom.rows(); ++i) r.set(top.rows() + i, j, bottom.at(i, j));
  }
  return r;
}

Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

}  // namespace mpcalc
