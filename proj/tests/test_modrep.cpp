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
#include "jja/modrep.hpp"

using namespace jja;

namespace {
const FieldSpec kF5 = FieldSpec::prime(5);
const FieldSpec kQ = FieldSpec::rationals();
}  // namespace

TEST_CASE("trivial and regular actions are modules") {
  auto h3 = families::heisenberg<Fp>(1, kF5);
  CHECK(is_jj_module(ActionData<Fp>::trivial(h3, 2)).holds);
  auto can = canonical_actions(h3);
  CHECK(is_jj_module(can.regular).holds);
  CHECK(is_jj_module(can.dual).holds);
}

TEST_CASE("identity operators on k^1 do not form an h(3)-module") {
  auto h3 = families::heisenberg<Fp>(1, kF5);
  std::vector<Mat<Fp>> rho(3, Mat<Fp>::Identity(1, 1));
  auto verdict = is_jj_module(ActionData<Fp>(h3, 1, rho));
  REQUIRE(!verdict.holds);
  REQUIRE(verdict.witness.has_value());
  // first failing pair is (e, e): lhs rho(0) = 0 vs rhs -2
  CHECK(verdict.witness->first == 0);
  CHECK(verdict.witness->second == 0);
  CHECK(verdict.defect(0, 0) == Fp(2, 5));
  // the (e, f) pair fails with lhs rho_z = 1 against rhs -2
  ActionData<Fp> d(h3, 1, rho);
  Mat<Fp> lhs = d.of(h3.product(0, 1));
  Mat<Fp> rhs = -(rho[0] * rho[1] + rho[1] * rho[0]);
  CHECK(lhs(0, 0) == Fp(1, 5));
  CHECK(rhs(0, 0) == Fp(-2, 5));
}

TEST_CASE("module/representation equivalence on the corpus") {
  auto check_equiv = [](const auto& action) {
    auto rep = to_representation(action);
    CHECK(is_jj_module(action).holds == rep.jordan_morphism);
  };
  auto h3 = families::heisenberg<Fp>(1, kF5);
  check_equiv(ActionData<Fp>::trivial(h3, 3));
  check_equiv(canonical_actions(h3).regular);
  check_equiv(canonical_actions(families::a12<Rat>(kQ)).regular);
  std::vector<Mat<Fp>> bad(3, Mat<Fp>::Identity(1, 1));
  check_equiv(ActionData<Fp>(h3, 1, bad));
}

TEST_CASE("regular action of A_{1,2} over Q") {
  auto a = families::a12<Rat>(kQ);
  auto can = canonical_actions(a);
  Mat<Rat> expected(2, 2);
  expected << Rat(0), Rat(0), Rat(1), Rat(0);
  CHECK(exactly_equal<Rat>(can.regular.rho[0], expected));
  CHECK(is_zero<Rat>(can.regular.rho[1]));
  auto rep = to_representation(can.regular);
  CHECK(rep.jordan_morphism);
  CHECK(exactly_equal<Rat>(rep.phi[0], Mat<Rat>(-expected)));
}

TEST_CASE("dual action matrices are transposes of the regular ones") {
  auto run = [](const auto& a) {
    using S = std::decay_t<decltype(a.gamma()(0, 0))>;
    auto can = canonical_actions(a);
    for (int i = 0; i < a.dim(); ++i)
      CHECK(exactly_equal<S>(can.dual.rho[i], Mat<S>(can.regular.rho[i].transpose())));
  };
  run(families::heisenberg<Fp>(1, kF5));
  run(families::heisenberg<Rat>(2, kQ));
  run(families::abelian<Fp>(3, kF5));
}

TEST_CASE("canonical actions refuse non-JJ algebras") {
  CHECK_THROWS_AS(canonical_actions(families::truncated_polynomial<Fp>(kF5)), NotJacobiJordan);
}

TEST_CASE("regular representation kernel equals the annihilator") {
  auto h3 = families::heisenberg<Fp>(1, kF5);
  auto ker = regular_representation_kernel(h3);
  CHECK(ker == leibniz_center(h3));  // commutative: left annihilator = center
  CHECK(regular_representation_kernel(families::abelian<Fp>(2, kF5)).dim() == 2);
}
