// Copyright 2026 The jjalg developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jja/linalg.hpp"

using namespace jja;

namespace {

Mat<Fp> random_mat(SeededRng& rng, const FieldSpec& f, int r, int c) {
  Mat<Fp> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rng.scalar<Fp>(f);
  return m;
}

}  // namespace

TEST_CASE("rref, rank and kernel on small examples") {
  auto f5 = FieldSpec::prime(5);
  Mat<Fp> id = Mat<Fp>::Identity(3, 3);
  auto rr = rref<Fp>(id);
  CHECK(rr.rank == 3);
  CHECK(kernel_basis<Fp>(id).cols() == 0);

  Mat<Fp> z = Mat<Fp>::Zero(2, 2);
  CHECK(rank<Fp>(z) == 0);
  CHECK(kernel_subspace<Fp>(z).dim() == 2);
  auto sol = solve<Fp>(z, Vec<Fp>::Zero(2));
  CHECK(sol.consistent);
  CHECK(is_zero<Fp>(sol.particular));

  // [[0,1],[0,0]] over F_5: rank 1, kernel = span{(1,0)}
  Mat<Fp> n(2, 2);
  n << Fp(0, 5), Fp(1, 5), Fp(0, 5), Fp(0, 5);
  CHECK(rank<Fp>(n) == 1);
  auto ker = kernel_subspace<Fp>(n);
  REQUIRE(ker.dim() == 1);
  CHECK(ker.basis()(0, 0) == Fp(1, 5));
  CHECK(ker.basis()(0, 1) == Fp(0, 5));
}

TEST_CASE("solve reports inconsistency without error") {
  Mat<Rat> m(2, 1);
  m << Rat(1), Rat(1);
  Vec<Rat> b(2);
  b << Rat(1), Rat(2);
  auto s = solve<Rat>(m, b);
  CHECK(!s.consistent);
  b << Rat(2), Rat(2);
  s = solve<Rat>(m, b);
  REQUIRE(s.consistent);
  CHECK(s.particular(0) == Rat(2));
}

TEST_CASE("M times kernel basis vanishes and ranks add up") {
  SeededRng rng(7);
  auto f5 = FieldSpec::prime(5);
  for (int trial = 0; trial < 50; ++trial) {
    int r = 1 + static_cast<int>(rng.below(5));
    int c = 1 + static_cast<int>(rng.below(5));
    Mat<Fp> m = random_mat(rng, f5, r, c);
    Mat<Fp> k = kernel_basis<Fp>(m);
    CHECK(is_zero<Fp>(Mat<Fp>(m * k)));
    CHECK(rank<Fp>(m) + static_cast<int>(k.cols()) == c);
  }
}

TEST_CASE("rref canonicity: two bases of one subspace agree") {
  SeededRng rng(11);
  auto f5 = FieldSpec::prime(5);
  for (int trial = 0; trial < 30; ++trial) {
    Mat<Fp> m = random_mat(rng, f5, 3, 4);
    auto u = Subspace<Fp>::span_of_rows(m);
    // shuffle generators by an invertible row mix
    Mat<Fp> t = random_mat(rng, f5, 3, 3);
    if (rank<Fp>(t) < 3) continue;
    auto w = Subspace<Fp>::span_of_rows(Mat<Fp>(t * m));
    CHECK(u == w);
  }
}

TEST_CASE("kron dimensions and lattice identities") {
  auto f5 = FieldSpec::prime(5);
  Mat<Fp> i2 = Mat<Fp>::Identity(2, 2), i3 = Mat<Fp>::Identity(3, 3);
  CHECK(exactly_equal<Fp>(kron<Fp>(i2, i3), Mat<Fp>(Mat<Fp>::Identity(6, 6))));
  SeededRng rng(3);
  Mat<Fp> m = random_mat(rng, f5, 2, 2);
  CHECK(exactly_equal<Fp>(kron<Fp>(m, Mat<Fp>(Mat<Fp>::Identity(1, 1))), m));
  // mixed-product property on random pairs
  for (int trial = 0; trial < 20; ++trial) {
    Mat<Fp> a = random_mat(rng, f5, 2, 2), b = random_mat(rng, f5, 2, 2);
    Mat<Fp> c = random_mat(rng, f5, 2, 2), d = random_mat(rng, f5, 2, 2);
    CHECK(exactly_equal<Fp>(Mat<Fp>(kron<Fp>(a, b) * kron<Fp>(c, d)),
                            kron<Fp>(Mat<Fp>(a * c), Mat<Fp>(b * d))));
  }
}

TEST_CASE("subspace operations") {
  Mat<Rat> e1(1, 2), e2(1, 2);
  e1 << Rat(1), Rat(0);
  e2 << Rat(0), Rat(1);
  auto u1 = Subspace<Rat>::span_of_rows(e1);
  auto u2 = Subspace<Rat>::span_of_rows(e2);
  auto plane = sum(u1, u2);
  CHECK(plane.dim() == 2);
  CHECK(plane == Subspace<Rat>::full(2));
  CHECK(plane.quotient_dim(Subspace<Rat>::zero(2)) == 2);
  CHECK(intersect(u1, u2).dim() == 0);
  CHECK_THROWS_AS(u1.quotient_dim(u2), NotContained);

  // f = [[0,1],[0,0]]: Ker f = Im f = span{(1,0)}, quotient dim 0
  Mat<Rat> f(2, 2);
  f << Rat(0), Rat(1), Rat(0), Rat(0);
  auto ker = kernel_subspace<Rat>(f);
  auto im = Subspace<Rat>::span_of_cols(f);
  CHECK(ker == im);
  CHECK(ker.quotient_dim(im) == 0);
}

TEST_CASE("determinant and inverse are exact") {
  Mat<Rat> m(2, 2);
  m << Rat(1, 2), Rat(1, 3), Rat(1, 4), Rat(1, 5);
  CHECK(determinant<Rat>(m) == Rat(1, 10) - Rat(1, 12));
  Mat<Rat> mi = inverse<Rat>(m);
  CHECK(exactly_equal<Rat>(Mat<Rat>(m * mi), Mat<Rat>(Mat<Rat>::Identity(2, 2))));
  Mat<Fp> s(2, 2);
  s << Fp(2, 5), Fp(1, 5), Fp(3, 5), Fp(4, 5);
  CHECK(determinant<Fp>(s) == Fp(0, 5));
  CHECK_THROWS_AS(inverse<Fp>(s), Error);
}
