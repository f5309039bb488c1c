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
#include "jja/frobenius.hpp"

using namespace jja;

namespace {
const FieldSpec kF5 = FieldSpec::prime(5);
const FieldSpec kQ = FieldSpec::rationals();
}  // namespace

TEST_CASE("abelian algebras: every form is invariant") {
  auto a = families::abelian<Fp>(3, kF5);
  auto space = invariant_form_space(a);
  CHECK(space.basis_forms.size() == 9);
  CHECK(space.common_radical.dim() == 0);
}

TEST_CASE("h(3): every invariant form kills z") {
  auto h3 = families::heisenberg<Rat>(1, kQ);
  auto space = invariant_form_space(h3);
  Vec<Rat> z = h3.basis_vector(2);
  for (const auto& b : space.basis_forms) {
    CHECK(is_invariant_form(h3, b));
    CHECK(is_zero<Rat>(Vec<Rat>(b.transpose() * z)));  // B(z, -) = 0
    CHECK(is_zero<Rat>(Vec<Rat>(b * z)));              // B(-, z) = 0 too
  }
  CHECK(space.common_radical.contains(z));
}

TEST_CASE("A_{1,2} invariant space contains the paper certificate") {
  auto a = families::a12<Rat>(kQ);
  Mat<Rat> b(2, 2);
  b << Rat(1), Rat(1), Rat(1), Rat(0);
  CHECK(is_invariant_form(a, b));
  CHECK(determinant<Rat>(b) == Rat(-1));
  auto space = invariant_form_space(a);
  CHECK(space.basis_forms.size() == 2);
  CHECK(space.common_radical.dim() == 0);
}

TEST_CASE("frobenius verdicts of the paper examples") {
  auto v1 = is_frobenius(families::a12<Rat>(kQ));
  REQUIRE(v1.kind == FrobeniusKind::Frobenius);
  REQUIRE(v1.certificate.has_value());
  CHECK(is_invariant_form(families::a12<Rat>(kQ), *v1.certificate));
  CHECK(!(determinant<Rat>(*v1.certificate) == Rat(0)));

  auto a12f5 = families::a12<Fp>(kF5);
  auto v1p = is_frobenius(a12f5);
  REQUIRE(v1p.kind == FrobeniusKind::Frobenius);
  CHECK(is_invariant_form(a12f5, *v1p.certificate));

  for (int n = 1; n <= 2; ++n) {
    auto h = families::heisenberg<Fp>(n, kF5);
    auto v = is_frobenius(h);
    REQUIRE(v.kind == FrobeniusKind::NotFrobenius);
    REQUIRE(v.radical_witness.has_value());
    // witness is proportional to z
    Vec<Fp> w = *v.radical_witness;
    for (int i = 0; i < 2 * n; ++i) CHECK(w(i) == Fp(0, 5));
    CHECK(!(w(2 * n) == Fp(0, 5)));
  }

  for (int n = 1; n <= 4; ++n) {
    auto v = is_frobenius(families::abelian<Fp>(n, kF5), 300, 7);
    REQUIRE(v.kind == FrobeniusKind::Frobenius);
    CHECK(!(determinant<Fp>(*v.certificate) == Fp(0, 5)));
    auto vq = is_frobenius(families::abelian<Rat>(n, kQ), 300, 7);
    REQUIRE(vq.kind == FrobeniusKind::Frobenius);
  }
}

TEST_CASE("radical witnesses kill every basis form") {
  auto run = [](const auto& a) {
    using S = std::decay_t<decltype(a.gamma()(0, 0))>;
    auto space = invariant_form_space(a);
    auto v = is_frobenius(a);
    if (v.kind == FrobeniusKind::NotFrobenius) {
      for (const auto& b : space.basis_forms)
        CHECK(is_zero<S>(Vec<S>(b.transpose() * (*v.radical_witness))));
    }
    if (v.kind == FrobeniusKind::Frobenius) {
      CHECK(space.common_radical.dim() == 0);  // soundness trichotomy
      CHECK(is_invariant_form(a, *v.certificate));
    }
  };
  run(families::heisenberg<Fp>(1, kF5));
  run(families::heisenberg<Fp>(2, kF5));
  run(families::heisenberg<Rat>(1, kQ));
  run(families::a12<Fp>(kF5));
  run(families::j_t<Rat>(3, 2, kQ));
  run(families::abelian<Fp>(2, kF5));
}

TEST_CASE("seeded verdicts are deterministic") {
  auto a = families::abelian<Rat>(3, kQ);
  auto v1 = is_frobenius(a, 50, 99);
  auto v2 = is_frobenius(a, 50, 99);
  REQUIRE(v1.kind == FrobeniusKind::Frobenius);
  CHECK(exactly_equal<Rat>(*v1.certificate, *v2.certificate));
}
