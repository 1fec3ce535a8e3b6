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

#include <set>

#include "mpcalc/gen.hpp"
#include "mpcalc/homology.hpp"

using namespace mpcalc;

namespace {

// Independent subspace census: canonical forms of all spans of row sets.
std::size_t count_subspaces(unsigned long q, std::size_t dim) {
  Ring f = Ring::prime_field(q);
  std::size_t vectors = 1;
  for (std::size_t i = 0; i < dim; ++i) vectors *= q;
  std::set<std::string> seen;
  // spans of up to `dim` vectors cover every subspace
  std::vector<std::size_t> pick(dim, 0);
  while (true) {
    Matrix rows(f, dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      std::size_t code = pick[r];
      for (std::size_t c = 0; c < dim; ++c) {
        rows.set(r, c, f.from_int(static_cast<long>(code % q)));
        code /= q;
      }
    }
    seen.insert(rref(rows).r.to_text());
    std::size_t i = 0;
    while (i < dim && ++pick[i] == vectors) pick[i++] = 0;
    if (i == dim) break;
  }
  return seen.size();
}

}  // namespace

TEST_CASE("class enumeration counts subspaces") {
  CHECK(enumerate_classes(2, 1).size() == 2);
  CHECK(enumerate_classes(3, 2).size() == 6);
  CHECK(enumerate_classes(7, 3).size() == 116);
  for (unsigned long q : {2ul, 3ul}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(enumerate_classes(q, n).size() == count_subspaces(q, n));
    }
  }
  // every key is its own canonical form and keys are distinct
  auto all = enumerate_classes(3, 2);
  std::set<std::string> texts;
  for (const auto& c : all) {
    CHECK(class_of(pair_of(c)) == c);
    texts.insert(c.to_text());
  }
  CHECK(texts.size() == all.size());
  CHECK_THROWS_AS(enumerate_classes(37, 1), ScaleCapExceeded);
  CHECK_THROWS_AS(enumerate_classes(3, 4), ScaleCapExceeded);
}

TEST_CASE("bottom faces pin the worked examples") {
  Ring f5 = Ring::prime_field(5);
  // dropping the first column of [1,s,r] rescales to [1, s^-1 r]
  for (long s = 1; s < 5; ++s) {
    for (long r = 1; r < 5; ++r) {
      ClassKey key{f5, 3, Matrix::from_ints(f5, {{1, s, r}})};
      ClassKey n0 = face_bottom(key, 0);
      Scalar expect = f5.mul(*f5.inv(f5.from_int(s)), f5.from_int(r));
      Matrix want(f5, 1, 2);
      want.set(0, 0, f5.one());
      want.set(0, 1, expect);
      CHECK(n0.rref == want);
    }
  }
  // faces of the maximum stay maximal
  ClassKey top{f5, 3, Matrix(f5, 0, 3)};
  for (std::size_t i = 0; i < 3; ++i) CHECK(face_bottom(top, i).rref.rows() == 0);
  CHECK_THROWS_AS(face_bottom(top, 3), DimensionMismatch);
}

TEST_CASE("bottom faces preserve the infimum") {
  Gen gen(31);
  Ring f3 = Ring::prime_field(3);
  auto classes = enumerate_classes(3, 3);
  for (int t = 0; t < 60; ++t) {
    const ClassKey& c1 = classes[gen.index(classes.size())];
    const ClassKey& c2 = classes[gen.index(classes.size())];
    std::size_t i = gen.index(3);
    ClassKey meet_first = class_of(meet(pair_of(c1), pair_of(c2)).pair);
    ClassKey lhs = face_bottom(meet_first, i);
    ClassKey rhs = class_of(
        meet(pair_of(face_bottom(c1, i)), pair_of(face_bottom(c2, i))).pair);
    CHECK(lhs == rhs);
  }
  // and the minimum goes to the minimum
  ClassKey bottom{f3, 3, Matrix::identity(f3, 3)};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(face_bottom(bottom, i).rref == Matrix::identity(f3, 2));
  }
}

TEST_CASE("top faces pin the worked examples") {
  Ring f5 = Ring::prime_field(5);
  // absorbing the unit first column gives the maximum
  ClassKey key{f5, 3, Matrix::from_ints(f5, {{1, 2, 3}})};
  CHECK(face_top(key, 0).rref.rows() == 0);
  // faces of the minimum stay minimal
  ClassKey bottom{f5, 3, Matrix::identity(f5, 3)};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(face_top(bottom, i).rref == Matrix::identity(f5, 2));
  }
}

TEST_CASE("top and bottom faces swap under duality") {
  Gen gen(32);
  auto classes = enumerate_classes(3, 3);
  for (int t = 0; t < 50; ++t) {
    const ClassKey& c = classes[gen.index(classes.size())];
    std::size_t i = gen.index(3);
    // top face of the dual class = dual of the bottom face
    ClassKey lhs = face_top(class_of(dual(pair_of(c))), i);
    ClassKey rhs = class_of(dual(pair_of(face_bottom(c, i))));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("degeneracy pins the worked examples") {
  Ring f5 = Ring::prime_field(5);
  CHECK(is_degenerate(ClassKey{f5, 2, Matrix(f5, 0, 2)}));  // maximum binary class
  for (long r = 1; r < 5; ++r) {
    CHECK(!is_degenerate(ClassKey{f5, 2, Matrix::from_ints(f5, {{1, r}})}));
  }
  CHECK(is_degenerate(ClassKey{f5, 2, Matrix::from_ints(f5, {{1, 0}})}));
  CHECK(is_degenerate(ClassKey{f5, 2, Matrix::from_ints(f5, {{0, 1}})}));
  CHECK(is_degenerate(ClassKey{f5, 2, Matrix::identity(f5, 2)}));
  CHECK_THROWS_AS(is_degenerate(ClassKey{f5, 1, Matrix(f5, 0, 1)}), Error);
}

TEST_CASE("binary degeneracy is symmetric in the face index") {
  for (unsigned long q : {2ul, 3ul}) {
    for (const auto& c : enumerate_classes(q, 2)) {
      bool at0 = face_top(c, 0) == face_bottom(c, 0);
      bool at1 = face_top(c, 1) == face_bottom(c, 1);
      CHECK(at0 == at1);
    }
  }
}

TEST_CASE("boundary matrices compose to zero") {
  for (unsigned long q : {2ul, 3ul, 5ul, 7ul}) {
    Matrix eps = boundary_matrix(q, 0);
    Matrix d1 = boundary_matrix(q, 1);
    Matrix d2 = boundary_matrix(q, 2);
    CHECK((d1 * eps).is_zero());
    CHECK((d2 * d1).is_zero());
    CHECK(d1.is_zero());  // over a field the binary boundary vanishes
  }
}

TEST_CASE("homology pins the expected groups") {
  HomologyResult h0 = homology(3, 0);
  CHECK(h0.free_rank == 1);
  CHECK(h0.torsion.empty());
  CHECK(h0.to_string() == "Z");

  CHECK(homology(2, 1).to_string() == "0");
  HomologyResult h5 = homology(5, 1);
  REQUIRE(h5.torsion.size() == 1);
  CHECK(h5.torsion[0] == 2);
  CHECK(h5.free_rank == 0);
  CHECK(h5.to_string() == "Z/2");
  HomologyResult h7 = homology(7, 1);
  REQUIRE(h7.torsion.size() == 1);
  CHECK(h7.torsion[0] == 3);
}

TEST_CASE("presentation and boundary homology agree") {
  CHECK(presentation_h1(2) == homology(2, 1));
  CHECK(presentation_h1(3) == homology(3, 1));
  CHECK(presentation_h1(5) == homology(5, 1));
  CHECK(presentation_h1(5).to_string() == "Z/2");
  CHECK(presentation_h1(7) == homology(7, 1));
  CHECK(presentation_h1(11) == homology(11, 1));
  CHECK(presentation_h1(13) == homology(13, 1));
}

TEST_CASE("abelian quotient reduces relation lattices") {
  Ring z = Ring::integers();
  // Z^2 / <(2,0),(0,3)> = Z/2 (+) Z/3 = Z/6
  HomologyResult h = abelian_quotient(2, Matrix::from_ints(z, {{2, 0}, {0, 3}}));
  CHECK(h.free_rank == 0);
  REQUIRE(h.torsion.size() == 1);
  CHECK(h.torsion[0] == 6);
  // no relations: free
  HomologyResult free2 = abelian_quotient(2, Matrix(z, 0, 2));
  CHECK(free2.free_rank == 2);
  CHECK(free2.to_string() == "Z^2");
}
