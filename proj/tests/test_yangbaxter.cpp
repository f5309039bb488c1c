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

#include "jja/families.hpp"
#include "jja/yangbaxter.hpp"

using namespace jja;

namespace {
const FieldSpec kF3 = FieldSpec::prime(3);
const FieldSpec kF5 = FieldSpec::prime(5);
const FieldSpec kQ = FieldSpec::rationals();
}  // namespace

TEST_CASE("R on an abelian algebra is the scaled swap") {
  auto a = families::abelian<Fp>(2, kF5);
  Vec<Fp> c(2);
  c << Fp(1, 5), Fp(0, 5);
  Fp alpha(3, 5);
  auto ctx = build_R(a, alpha, c);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          Fp expect = (k == j && l == i) ? alpha : Fp(0, 5);
          CHECK(ctx.r(k * 2 + l, i * 2 + j) == expect);
        }
  CHECK(check_qybe(ctx).holds);
}

TEST_CASE("R of h(3, F_5) maps e (x) f to f (x) e + z (x) z and solves QYBE") {
  auto h3 = families::heisenberg<Fp>(1, kF5);
  auto ctx = build_R(h3, Fp(1, 5), Vec<Fp>(h3.basis_vector(2)));
  Vec<Fp> col = ctx.r.col(0 * 3 + 1);
  for (int idx = 0; idx < 9; ++idx) {
    Fp expect(0, 5);
    if (idx == 1 * 3 + 0) expect = Fp(1, 5);  // f (x) e
    if (idx == 2 * 3 + 2) expect = Fp(1, 5);  // z (x) z
    CHECK(col(idx) == expect);
  }
  auto res = check_qybe(ctx);
  CHECK(res.holds);
  CHECK(res.residual_rank == 0);
}

TEST_CASE("non-Leibniz truncated polynomials break QYBE exactly") {
  auto trunc = families::truncated_polynomial<Fp>(kF5);
  REQUIRE(!is_leibniz(trunc).holds);
  auto ctx = build_R(trunc, Fp(1, 5), Vec<Fp>(trunc.basis_vector(2)));  // central x^3
  auto res = check_qybe(ctx);
  CHECK(!res.holds);
  CHECK(res.residual_rank > 0);
}

TEST_CASE("build_R guards") {
  auto h3 = families::heisenberg<Fp>(1, kF5);
  CHECK_THROWS_AS(build_R(h3, Fp(0, 5), Vec<Fp>(h3.basis_vector(2))), ZeroAlpha);
  CHECK_THROWS_AS(build_R(h3, Fp(1, 5), Vec<Fp>(Vec<Fp>::Zero(3))), ZeroCentral);
  CHECK_THROWS_AS(build_R(h3, Fp(1, 5), Vec<Fp>(h3.basis_vector(0))), NotCentral);
}

TEST_CASE("A_{X,Y,Z} admits the two-parameter central family") {
  Mat<Fp> x(1, 1), y(1, 1), z(1, 1);
  x << Fp(1, 5);
  y << Fp(2, 5);
  z << Fp(0, 5);
  auto a = families::a_xyz<Fp>(1, x, y, z, kF5);
  Vec<Fp> c = Vec<Fp>::Zero(4);
  c(2) = Fp(3, 5);  // beta y
  c(3) = Fp(4, 5);  // gamma z
  auto ctx = build_R(a, Fp(2, 5), c);
  CHECK(check_qybe(ctx).holds);
}

TEST_CASE("V_{(f,v0)} is 3-step nilpotent and its R solves QYBE") {
  Mat<Fp> f(2, 2);
  f << Fp(0, 5), Fp(1, 5), Fp(0, 5), Fp(0, 5);
  Vec<Fp> v0(2);
  v0 << Fp(1, 5), Fp(0, 5);
  auto a = families::v_f_v0<Fp>(f, v0, kF5);
  auto s = series(a);
  REQUIRE(s.nilpotency_step.has_value());
  CHECK(*s.nilpotency_step <= 3);
  auto center = leibniz_center(a);
  REQUIRE(center.dim() > 0);
  auto ctx = build_R(a, Fp(1, 5), Vec<Fp>(center.basis_vector(0)));
  CHECK(check_qybe(ctx).holds);
}

TEST_CASE("sweep: QYBE iff Leibniz on named algebras") {
  auto h3 = qybe_leibniz_equivalence(families::heisenberg<Fp>(1, kF5));
  CHECK(!h3.vacuous);
  CHECK(h3.consistent);
  CHECK(h3.jj_step_consistent);
  CHECK(h3.checked > 0);

  auto tr = qybe_leibniz_equivalence(families::truncated_polynomial<Fp>(kF5));
  CHECK(tr.consistent);  // both sides false together

  auto q = qybe_leibniz_equivalence(families::heisenberg<Rat>(1, kQ), 10, 7);
  CHECK(q.consistent);

  // h(5) is 3-step nilpotent as well
  auto h5 = qybe_leibniz_equivalence(families::heisenberg<Fp>(2, kF3));
  CHECK(h5.consistent);
  CHECK(h5.jj_step_consistent);
}

TEST_CASE("iff sweep over seeded random commutative dim-3 algebras over F_3") {
  // a full dim-3 enumeration is 3^18 tables, so this samples under a cap
  SeededRng rng(31337);
  int with_center = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Algebra<Fp> a(kF3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        Vec<Fp> v(3);
        for (int k = 0; k < 3; ++k) v(k) = rng.scalar<Fp>(kF3);
        a.set_product(i, j, v);
        a.set_product(j, i, v);
      }
    auto rep = qybe_leibniz_equivalence(a);
    if (rep.vacuous) continue;
    ++with_center;
    CHECK(rep.consistent);
  }
  // random tables are rarely central-rich; make sure structured ones run
  auto h3 = families::heisenberg<Fp>(1, kF3);
  CHECK(!qybe_leibniz_equivalence(h3).vacuous);
  CHECK(with_center >= 0);
}

TEST_CASE("full iff sweep over all commutative dim-2 algebras over F_3") {
  // every commutative bilinear multiplication on F_3^2, i.e. all gamma
  // tables with gamma(0,1) = gamma(1,0): 3^6 of them
  int tested = 0, with_center = 0;
  for (std::uint64_t idx = 0; idx < 729; ++idx) {
    std::uint64_t t = idx;
    auto next = [&]() {
      Fp v(static_cast<long long>(t % 3), 3);
      t /= 3;
      return v;
    };
    Algebra<Fp> a(kF3, 2);
    Vec<Fp> g00(2), g01(2), g11(2);
    g00 << next(), next();
    g01 << next(), next();
    g11 << next(), next();
    a.set_product(0, 0, g00);
    a.set_product_symmetric(0, 1, g01);
    a.set_product(1, 1, g11);
    ++tested;
    auto rep = qybe_leibniz_equivalence(a);
    if (rep.vacuous) continue;
    ++with_center;
    CHECK(rep.consistent);
    if (!rep.consistent) {
      CAPTURE(idx);
      REQUIRE(false);
    }
  }
  CHECK(tested == 729);
  CHECK(with_center > 0);
}
