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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpcalc/gen.hpp"
#include "mpcalc/grothendieck.hpp"

using namespace mpcalc;

namespace {

// Lickorish moves, used to exercise presentation invariance.
Matrix add_zero_row(const Matrix& m) { return vstack(m, Matrix::zero(m.ring(), 1, m.cols())); }

Matrix diag_extend(const Matrix& m) {
  Matrix out = block2x2(m, Matrix::zero(m.ring(), m.rows(), 1),
                        Matrix::zero(m.ring(), 1, m.cols()),
                        Matrix::identity(m.ring(), 1));
  return out;
}

}  // namespace

TEST_CASE("module invariants pin the worked examples") {
  Ring z = Ring::integers();
  Ring f3 = Ring::prime_field(3);

  ModuleInvariant zero_mod = module_invariant(Matrix::identity(z, 3));
  CHECK(zero_mod.free_rank == 0);
  CHECK(zero_mod.invariant_factors.empty());

  ModuleInvariant free_one = module_invariant(Matrix::from_ints(z, {{0}}));
  CHECK(free_one.free_rank == 1);
  CHECK(free_one.invariant_factors.empty());

  ModuleInvariant six = module_invariant(Matrix::from_ints(z, {{2, 0}, {0, 3}}));
  CHECK(six.free_rank == 0);
  REQUIRE(six.invariant_factors.size() == 1);
  CHECK(six.invariant_factors[0] == 6);

  ModuleInvariant plane = module_invariant(Matrix::from_ints(f3, {{1, 2}}));
  CHECK(plane.free_rank == 1);

  CHECK_THROWS_AS(module_invariant(Matrix::identity(Ring::mod_ring(4), 2)), UnsupportedRing);
}

TEST_CASE("presentation equivalence matches the four moves") {
  Ring z = Ring::integers();
  Gen gen(21);
  for (int t = 0; t < 50; ++t) {
    Matrix a = gen.matrix(z, 1 + gen.index(3), 1 + gen.index(3));
    CHECK(lickorish_equivalent(a, add_zero_row(a)));
    CHECK(lickorish_equivalent(a, diag_extend(a)));
    Matrix p = gen.invertible(z, a.rows());
    CHECK(lickorish_equivalent(a, p * a));
  }
  CHECK(!lickorish_equivalent(Matrix::from_ints(z, {{2}}), Matrix::from_ints(z, {{3}})));
}

TEST_CASE("gamma telescopes on systems and kills the minimum") {
  Ring f2 = Ring::prime_field(2);
  Ring z = Ring::integers();
  Gen gen(22);

  // on a system the value collapses to the class of the coefficient matrix
  for (int t = 0; t < 30; ++t) {
    Matrix a = gen.matrix(z, 1 + gen.index(3), 1 + gen.index(3));
    FormalSum lhs = collapse_to_k0(gamma(MatrixPair::system(a)));
    FormalSum rhs = collapse_to_k0(FormalSum::generator(matrix_key(a)));
    CHECK(lhs == rhs);
  }

  // the minimum class maps to zero
  CHECK(collapse_to_k0(gamma(MatrixPair::bottom(f2, 2))).is_zero());
  CHECK(collapse_to_k0(gamma(MatrixPair::bottom(z, 3))).is_zero());

  // the maximum unary class carries the free module of rank one
  CHECK(dim_character(gamma(MatrixPair::top(f2, 1))) == 1);
}

TEST_CASE("gamma is constant on certified-equivalent pairs") {
  Gen gen(23);
  for (const Ring& ring : {Ring::prime_field(3), Ring::integers()}) {
    for (int t = 0; t < 40; ++t) {
      MatrixPair p = gen.pair(ring, 1 + gen.index(2));
      // equivalence-preserving moves: invertible row/column action, translate
      Matrix pm = gen.invertible(ring, p.rows());
      Matrix qm = gen.invertible(ring, p.b_width());
      Matrix g = gen.matrix(ring, p.b_width(), p.arity());
      MatrixPair q(pm * p.b() * qm, pm * (p.a() + p.b() * g));
      CHECK(collapse_to_k0(gamma(p)) == collapse_to_k0(gamma(q)));
    }
  }
}

TEST_CASE("kappa pins the worked examples") {
  Ring f2 = Ring::prime_field(2);
  FormalSum k1 = kappa(Matrix::from_ints(f2, {{0}}));
  REQUIRE(k1.terms().size() == 1);
  CHECK(k1.terms().begin()->first == pair_key(MatrixPair::system(Matrix::from_ints(f2, {{0}}))));
  CHECK(k1.terms().begin()->second == 1);

  Ring f3 = Ring::prime_field(3);
  FormalSum k2 = kappa(Matrix::from_ints(f3, {{1, 1}}));
  REQUIRE(k2.terms().size() == 2);
  // first summand is the full line (minimum class), second divides exactly
  std::vector<MatrixPair> parsed;
  for (const auto& [key, c] : k2.terms()) {
    CHECK(c == 1);
    parsed.push_back(parse_pair_key(key));
  }
  int tops = 0, bottoms = 0;
  for (const auto& p : parsed) {
    Matrix c = canonical_form(p);
    if (c.rows() == 0) ++tops;
    if (c == Matrix::identity(f3, 1)) ++bottoms;
  }
  CHECK(tops == 1);
  CHECK(bottoms == 1);

  // kappa of the identity maps to zero around the triangle
  FormalSum around;
  FormalSum id_sum = kappa(Matrix::identity(f3, 3));
  for (const auto& [key, c] : id_sum.terms()) {
    around = around + gamma(parse_pair_key(key)).scaled(c);
  }
  CHECK(collapse_to_k0(around).is_zero());
}

TEST_CASE("kappa is invariant under each presentation move") {
  Gen gen(24);
  for (const Ring& ring : {Ring::prime_field(3), Ring::integers()}) {
    for (int move = 0; move < 4; ++move) {
      for (int t = 0; t < 100; ++t) {
        Matrix a = gen.matrix(ring, 1 + gen.index(2), 1 + gen.index(2));
        Matrix b = a;
        switch (move) {
          case 0:
            b = add_zero_row(a);
            break;
          case 1:
            b = diag_extend(a);
            break;
          case 2: {  // row or column permutation
            b = a;
            if (gen.index(2) == 0 && a.rows() > 1) b.swap_rows(0, a.rows() - 1);
            if (gen.index(2) == 0 && a.cols() > 1) b.swap_cols(0, a.cols() - 1);
            break;
          }
          case 3: {  // scalar multiple of a row onto another, or of a column
            b = a;
            if (gen.index(2) == 0 && a.rows() > 1) {
              for (std::size_t j = 0; j < a.cols(); ++j)
                b.set(0, j, ring.add(b.at(0, j), ring.mul(ring.from_int(2), b.at(1, j))));
            } else if (a.cols() > 1) {
              for (std::size_t i = 0; i < a.rows(); ++i)
                b.set(i, 0, ring.add(b.at(i, 0), ring.mul(b.at(i, 1), ring.from_int(-3))));
            }
            break;
          }
        }
        CHECK(g0_equal(kappa(a), kappa(b)));
      }
    }
  }
}

TEST_CASE("triangle identity holds on the generators") {
  Ring f5 = Ring::prime_field(5);
  Ring z = Ring::integers();
  CHECK(triangle_check(Matrix::identity(f5, 3)));
  CHECK(triangle_check(Matrix::identity(z, 2)));
  Gen gen(25);
  for (int t = 0; t < 50; ++t) {
    CHECK(triangle_check(gen.matrix(f5, 1 + gen.index(3), 1 + gen.index(3))));
    CHECK(triangle_check(gen.matrix(z, 1 + gen.index(2), 1 + gen.index(3))));
  }
}

TEST_CASE("round trips from the other two corners are the identity") {
  Gen gen(30);
  for (const Ring& ring : {Ring::prime_field(3), Ring::integers()}) {
    // starting from a unary pair: kappa of gamma's value returns the pair
    for (int t = 0; t < 40; ++t) {
      MatrixPair p = gen.pair(ring, 1);
      FormalSum lhs = kappa(hstack(p.b(), p.a())) - kappa(p.b());
      CHECK(g0_equal(lhs, FormalSum::generator(pair_key(p))));
    }
    // starting from an n-ary pair: compare after one more collapse
    for (int t = 0; t < 40; ++t) {
      MatrixPair p = gen.pair(ring, 1 + gen.index(2));
      FormalSum unary = kappa(hstack(p.b(), p.a())) - kappa(p.b());
      FormalSum transported;
      for (const auto& [key, c] : unary.terms()) {
        transported = transported + gamma(parse_pair_key(key)).scaled(c);
      }
      CHECK(collapse_to_k0(transported) == collapse_to_k0(gamma(p)));
    }
  }
}

TEST_CASE("g0 equality decides the defining relations") {
  Ring f3 = Ring::prime_field(3);
  Gen gen(26);
  // relation: [B,A | A'] - [B | A'] = [B,A' | A] - [B | A] for column data
  for (int t = 0; t < 40; ++t) {
    std::size_t rows = 1 + gen.index(3);
    Matrix b = gen.matrix(f3, rows, gen.index(3));
    Matrix a = gen.matrix(f3, rows, 1);
    Matrix a2 = gen.matrix(f3, rows, 1);
    FormalSum lhs;
    lhs.add(pair_key(MatrixPair(hstack(b, a), a2)), 1);
    lhs.add(pair_key(MatrixPair(b, a2)), -1);
    FormalSum rhs;
    rhs.add(pair_key(MatrixPair(hstack(b, a2), a)), 1);
    rhs.add(pair_key(MatrixPair(b, a)), -1);
    CHECK(g0_equal(lhs, rhs));
  }

  // 0_1 = 0
  FormalSum bottom_sum;
  bottom_sum.add(pair_key(MatrixPair::bottom(f3, 1)), 1);
  CHECK(g0_equal(bottom_sum, FormalSum()));

  // 1_1 and 0_1 are distinct
  Ring f2 = Ring::prime_field(2);
  FormalSum top_sum;
  top_sum.add(pair_key(MatrixPair::top(f2, 1)), 1);
  FormalSum bottom2;
  bottom2.add(pair_key(MatrixPair::bottom(f2, 1)), 1);
  CHECK(!g0_equal(top_sum, bottom2));
}

TEST_CASE("positive cone elements collapse and stay nonnegative") {
  Ring f3 = Ring::prime_field(3);
  Gen gen(27);

  // zero lower-left block splits the presentation
  for (int t = 0; t < 25; ++t) {
    Matrix a = gen.matrix(f3, 1 + gen.index(2), 1 + gen.index(2));
    Matrix c = gen.matrix(f3, 1 + gen.index(2), 1 + gen.index(2));
    Matrix b0 = Matrix::zero(f3, c.rows(), a.cols());
    CHECK(collapse_to_k0(positive_cone_element(a, b0, c)).is_zero());
  }

  // identity corners leave an invertible block
  for (int t = 0; t < 25; ++t) {
    std::size_t n = 1 + gen.index(2);
    Matrix id = Matrix::identity(f3, n);
    Matrix b = gen.matrix(f3, n, n);
    CHECK(collapse_to_k0(positive_cone_element(id, b, id)).is_zero());
  }

  // the dimension character is nonnegative on 100 random cone elements
  for (int t = 0; t < 100; ++t) {
    std::size_t c_cols = 1 + gen.index(2);
    Matrix a = gen.matrix(f3, 1 + gen.index(2), 1 + gen.index(2));
    Matrix b = gen.matrix(f3, 1 + gen.index(2), a.cols());
    Matrix c = gen.matrix(f3, b.rows(), c_cols);
    CHECK(dim_character(positive_cone_element(a, b, c)) >= 0);
  }

  CHECK_THROWS_AS(positive_cone_element(Matrix(f3, 1, 2), Matrix(f3, 1, 1), Matrix(f3, 1, 1)),
                  DimensionMismatch);
}

TEST_CASE("dimension character satisfies the axioms") {
  Ring f2 = Ring::prime_field(2);
  Ring f3 = Ring::prime_field(3);
  Gen gen(28);

  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(dim_character(FormalSum::generator(matrix_key(Matrix::identity(f3, n)))) == 0);
  }

  // additivity on block diagonals
  for (int t = 0; t < 40; ++t) {
    Matrix a = gen.matrix(f3, 1 + gen.index(2), 1 + gen.index(2));
    Matrix b = gen.matrix(f3, 1 + gen.index(2), 1 + gen.index(2));
    Matrix blockdiag = block2x2(a, Matrix::zero(f3, a.rows(), b.cols()),
                                Matrix::zero(f3, b.rows(), a.cols()), b);
    std::int64_t lhs = dim_character(FormalSum::generator(matrix_key(blockdiag)));
    std::int64_t rhs = dim_character(FormalSum::generator(matrix_key(a))) +
                       dim_character(FormalSum::generator(matrix_key(b)));
    CHECK(lhs == rhs);
  }

  // subadditivity on lower-triangular blocks, 200 random instances
  for (int t = 0; t < 200; ++t) {
    Matrix a = gen.matrix(f2, 1 + gen.index(2), 1 + gen.index(2));
    Matrix b = gen.matrix(f2, 1 + gen.index(2), a.cols());
    Matrix c = gen.matrix(f2, b.rows(), 1 + gen.index(2));
    Matrix block = block2x2(a, Matrix::zero(f2, a.rows(), c.cols()), b, c);
    std::int64_t whole = dim_character(FormalSum::generator(matrix_key(block)));
    std::int64_t parts = dim_character(FormalSum::generator(matrix_key(a))) +
                         dim_character(FormalSum::generator(matrix_key(c)));
    CHECK(whole <= parts);
  }

  // products dominate both factors in dimension (square case)
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + gen.index(2);
    Matrix a = gen.matrix(f3, n, n);
    Matrix b = gen.matrix(f3, n, n);
    std::int64_t ab = dim_character(FormalSum::generator(matrix_key(a * b)));
    CHECK(ab >= dim_character(FormalSum::generator(matrix_key(a))));
    CHECK(ab >= dim_character(FormalSum::generator(matrix_key(b))));
  }
}

TEST_CASE("formal sums parse and print") {
  FormalSum s;
  s.add("Z:1x1[2]", 2);
  s.add("Z:1x1[3]", -1);
  FormalSum back = FormalSum::parse(s.to_text());
  CHECK(back == s);
  CHECK(FormalSum::parse("").is_zero());
  FormalSum cancel;
  cancel.add("k", 1);
  cancel.add("k", -1);
  CHECK(cancel.is_zero());
}
