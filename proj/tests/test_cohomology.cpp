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

#include <unordered_set>

#include "jja/cohomology.hpp"
#include "jja/families.hpp"

using namespace jja;

namespace {

const FieldSpec kF3 = FieldSpec::prime(3);
const FieldSpec kF5 = FieldSpec::prime(5);
const FieldSpec kQ = FieldSpec::rationals();

// Test-side oracle: enumerate every vector of a subspace over F_p by
// running through all coefficient tuples of its basis.
std::vector<Vec<Fp>> all_elements(const Subspace<Fp>& space, std::uint32_t p) {
  std::vector<Vec<Fp>> out;
  std::uint64_t total = 1;
  for (int i = 0; i < space.dim(); ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec<Fp> v = Vec<Fp>::Zero(space.ambient_dim());
    std::uint64_t t = idx;
    for (int i = 0; i < space.dim(); ++i) {
      v += Fp(static_cast<long long>(t % p), p) * space.basis_vector(i);
      t /= p;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string encode(const Vec<Fp>& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    s += std::to_string(v(i).v);
    s += ',';
  }
  return s;
}

// Canonical coset representative of v modulo a subspace in RREF form.
Vec<Fp> reduce_mod(const Subspace<Fp>& b, Vec<Fp> v) {
  auto rr = rref<Fp>(b.basis());
  for (int r = 0; r < rr.rank; ++r) {
    int c = rr.pivots[r];
    if (!(v(c) == Fp(0))) v -= v(c) * Vec<Fp>(rr.rref.row(r).transpose());
  }
  return v;
}

}  // namespace

TEST_CASE("h(3) coflag cohomology: Z2 = 3, B2 = 1, h2 = 2") {
  auto h3 = families::heisenberg<Fp>(1, kF5);
  auto space = coflag_cohomology(h3, Vec<Fp>(Vec<Fp>::Zero(3)));
  CHECK(space.z2.dim() == 3);
  CHECK(space.b2.dim() == 1);
  CHECK(space.h2_dim == 2);
  // the free slots are (e,e), (f,f), (e,f) and theta(-, z) is forced to 0
  for (int i = 0; i < space.z2.dim(); ++i) {
    auto theta = space.unpack(space.z2.basis_vector(i));
    CHECK(is_zero<Fp>(theta.value(0, 2)));
    CHECK(is_zero<Fp>(theta.value(1, 2)));
    CHECK(is_zero<Fp>(theta.value(2, 2)));
  }
}

TEST_CASE("h(5) coflag cohomology: the C block is a full matrix block") {
  auto h5 = families::heisenberg<Fp>(2, kF5);
  auto space = coflag_cohomology(h5, Vec<Fp>(Vec<Fp>::Zero(5)));
  // slots on {e1,e2,f1,f2} survive: 10 of them; theta(-, z) dies
  CHECK(space.z2.dim() == 10);
  CHECK(space.b2.dim() == 1);
  CHECK(space.h2_dim == 9);

  // the lone coboundary direction is the identity C block
  auto delta = space.unpack(space.b2.basis_vector(0));
  CHECK(exactly_equal<Fp>(delta.value(0, 2), delta.value(1, 3)));
  CHECK(!is_zero<Fp>(delta.value(0, 2)));
  CHECK(is_zero<Fp>(delta.value(0, 3)));

  // a theta supported on the single off-diagonal slot (e1, f2) is a
  // genuine cocycle: the induced crossed system validates and its product
  // is a JJ algebra, so the slot is not tied to (e2, f1)
  auto d = CrossedData<Fp>::trivial(h5, 1);
  Vec<Fp> one(1);
  one(0) = Fp(1, 5);
  d.cocycle.set_symmetric(0, 3, one);  // theta(e1, f2) = 1, theta(e2, f1) = 0
  CHECK(validate_crossed_system(d).ok);
  CHECK(is_jacobi_jordan(crossed_product(d)));
}

TEST_CASE("h(5) class count over F_3 by exhaustive coset enumeration") {
  auto h5 = families::heisenberg<Fp>(2, kF3);
  auto space = coflag_cohomology(h5, Vec<Fp>(Vec<Fp>::Zero(5)));
  REQUIRE(space.z2.dim() == 10);
  REQUIRE(space.b2.dim() == 1);
  std::unordered_set<std::string> classes;
  for (const auto& theta : all_elements(space.z2, 3)) classes.insert(encode(reduce_mod(space.b2, theta)));
  CHECK(classes.size() == 19683);  // 3^9, matching h2 = 9
}

TEST_CASE("abelian base: all symmetric forms are cocycles, no coboundaries") {
  for (int n = 1; n <= 3; ++n) {
    auto a = families::abelian<Fp>(n, kF5);
    auto space = coflag_cohomology(a, Vec<Fp>(Vec<Fp>::Zero(n)));
    CHECK(space.z2.dim() == n * (n + 1) / 2);
    CHECK(space.b2.dim() == 0);
    CHECK(space.h2_dim == n * (n + 1) / 2);
  }
  auto aq = families::abelian<Rat>(2, kQ);
  CHECK(coflag_cohomology(aq, Vec<Rat>(Vec<Rat>::Zero(2))).h2_dim == 3);
}

TEST_CASE("A_{1,2} coflag cohomology collapses to one class") {
  auto a = families::a12<Fp>(kF5);
  auto space = coflag_cohomology(a, Vec<Fp>(Vec<Fp>::Zero(2)));
  // (e1,e2) and (e2,e2) slots die; the (e1,e1) slot is exactly the
  // coboundary image, confirmed below by brute force
  CHECK(space.z2.dim() == 1);
  CHECK(space.b2.dim() == 1);
  CHECK(space.h2_dim == 0);

  // brute-force oracle over F_5: enumerate all 125 symmetric forms,
  // filter the cocycle condition on all basis triples, then count
  // coboundary cosets
  int cocycles = 0;
  std::unordered_set<std::string> classes;
  for (int c11 = 0; c11 < 5; ++c11)
    for (int c12 = 0; c12 < 5; ++c12)
      for (int c22 = 0; c22 < 5; ++c22) {
        BilinearVMap<Fp> theta(2, 1);
        Vec<Fp> v(1);
        v(0) = Fp(c11, 5);
        theta.set_symmetric(0, 0, v);
        v(0) = Fp(c12, 5);
        theta.set_symmetric(0, 1, v);
        v(0) = Fp(c22, 5);
        theta.set_symmetric(1, 1, v);
        bool ok = true;
        for (int i = 0; i < 2 && ok; ++i)
          for (int j = 0; j < 2 && ok; ++j)
            for (int l = 0; l < 2 && ok; ++l) {
              Vec<Fp> r = theta.value_lin(i, a.product(j, l)) + theta.value_lin(j, a.product(l, i)) +
                          theta.value_lin(l, a.product(i, j));
              if (!is_zero<Fp>(r)) ok = false;
            }
        if (!ok) continue;
        ++cocycles;
        // canonical rep modulo coboundaries delta_t(a,b) = -t(a b)
        // t(e2) shifts the (e1,e1) slot arbitrarily: kill it
        std::string key = std::to_string(c12) + "," + std::to_string(c22);
        classes.insert(key);
      }
  CHECK(cocycles == 5);
  CHECK(classes.size() == 1);
}

TEST_CASE("lambda lists") {
  for (int n = 1; n <= 2; ++n) {
    auto lams = coflag_lambdas(families::heisenberg<Fp>(n, kF5));
    REQUIRE(lams.lambdas.size() == 1);
    CHECK(is_zero<Fp>(lams.lambdas[0]));
    CHECK(lams.complete);
  }
  auto ab = coflag_lambdas(families::abelian<Fp>(2, kF5));
  REQUIRE(ab.lambdas.size() == 1);
  CHECK(is_zero<Fp>(ab.lambdas[0]));

  auto a12 = coflag_lambdas(families::a12<Fp>(kF5));
  REQUIRE(a12.lambdas.size() == 1);
  CHECK(is_zero<Fp>(a12.lambdas[0]));

  auto q = coflag_lambdas(families::heisenberg<Rat>(1, kQ));
  REQUIRE(q.lambdas.size() == 1);
  CHECK(q.complete);

  // a non-nilpotent idempotent line admits a nonzero lambda over F_5:
  // lambda(x x) = lambda(x) = -2 lambda(x)^2 forces lambda(x) = 0 or 2
  Algebra<Fp> idem(kF5, 1, {"x"});
  idem.set_product(0, 0, idem.basis_vector(0));
  auto il = coflag_lambdas(idem);
  CHECK(il.lambdas.size() == 2);

  CHECK_THROWS_AS(coflag_lambdas(families::heisenberg<Fp>(1, kF3)),
                  ClassificationCharUnsupported);
  CHECK_THROWS_AS(coflag_lambdas(families::abelian<Fp>(1, FieldSpec::prime(2))),
                  ClassificationCharUnsupported);
}

TEST_CASE("invalid lambda is rejected") {
  auto h3 = families::heisenberg<Fp>(1, kF5);
  Vec<Fp> lam = Vec<Fp>::Zero(3);
  lam(0) = Fp(1, 5);
  CHECK_THROWS_AS(coflag_cohomology(h3, lam), InvalidLambda);
}

TEST_CASE("abelian_cocycles agrees with the coflag machinery at lambda = 0") {
  auto h3 = families::heisenberg<Fp>(1, kF5);
  auto space = abelian_cocycles(h3, ActionData<Fp>::trivial(h3, 1));
  CHECK(space.z2.dim() == 3);
  CHECK(space.b2.dim() == 1);
  CHECK(space.h2_dim == 2);
  CHECK_THROWS_AS(
      abelian_cocycles(h3, ActionData<Fp>(h3, 1, {Mat<Fp>::Identity(1, 1), Mat<Fp>::Identity(1, 1),
                                                  Mat<Fp>::Identity(1, 1)})),
      NotAModule);
}

TEST_CASE("every cocycle gives a valid crossed system, coboundary shifts are cohomologous") {
  auto h3 = families::heisenberg<Fp>(1, kF5);
  auto action = ActionData<Fp>::trivial(h3, 1);
  auto space = abelian_cocycles(h3, action);
  SeededRng rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    Vec<Fp> combo = Vec<Fp>::Zero(space.z2.ambient_dim());
    for (int i = 0; i < space.z2.dim(); ++i)
      combo += rng.scalar<Fp>(kF5) * space.z2.basis_vector(i);
    CrossedData<Fp> d = CrossedData<Fp>::trivial(h3, 1);
    d.cocycle = space.unpack(combo);
    REQUIRE(validate_crossed_system(d).ok);
    // shift by a random coboundary: delta_r with random r
    Mat<Fp> r(1, 3);
    for (int i = 0; i < 3; ++i) r(0, i) = rng.scalar<Fp>(kF5);
    CrossedData<Fp> dp = d;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        Vec<Fp> shift = action.rho[i] * r.col(j) + action.rho[j] * r.col(i) - r * h3.product(i, j);
        dp.cocycle.set_symmetric(i, j, Vec<Fp>(d.cocycle.value(i, j) + shift));
      }
    REQUIRE(validate_crossed_system(dp).ok);
    auto verdict = are_cohomologous(dp, d);
    CHECK(verdict.kind == CohomologousKind::Yes);
  }
}

TEST_CASE("metabelian cohomology over F_5 reproduces Ker f / Im f") {
  // trivial action: everything is a cocycle, nothing is a coboundary
  auto triv = metabelian_cohomology<Fp>(1, 2, {Mat<Fp>::Zero(2, 2)}, kF5);
  CHECK(triv.z2.dim() == 2);
  CHECK(triv.b2.dim() == 0);

  Mat<Fp> f(2, 2);
  f << Fp(0, 5), Fp(1, 5), Fp(0, 5), Fp(0, 5);
  auto space = metabelian_cohomology<Fp>(1, 2, {f}, kF5);
  CHECK(space.z2.dim() == 1);  // Ker f
  CHECK(space.b2.dim() == 1);  // Im f
  CHECK(space.h2_dim == 0);    // |Ker f / Im f| = 1 class

  Mat<Fp> not_anti = Mat<Fp>::Identity(2, 2);
  CHECK_THROWS_AS(metabelian_cohomology<Fp>(1, 2, {not_anti}, kF5), ActionNotAnticommuting);
}

TEST_CASE("metabelian cohomology over F_3: the cyclic sum degenerates") {
  // in characteristic 3 the lone triple gives 3 f(v0) = 0, so the cocycle
  // space is all of V rather than Ker f; the census below keeps the
  // classification honest in that characteristic
  Mat<Fp> f(2, 2);
  f << Fp(0, 3), Fp(1, 3), Fp(0, 3), Fp(0, 3);
  auto space = metabelian_cohomology<Fp>(1, 2, {f}, kF3);
  CHECK(space.z2.dim() == 2);
  CHECK(space.b2.dim() == 1);
  CHECK(space.h2_dim == 1);
}

TEST_CASE("codim-1 census over F_3 matches on both routes") {
  auto census = codim1_census<Fp>(2, kF3);
  // 9 square-zero endomorphisms of F_3^2: zero plus eight rank-one ones
  CHECK(census.entries.size() == 9);
  CHECK(census.total_formula == 17);  // 9 + 8 * 1
  CHECK(census.total_orbit == 17);
  for (const auto& e : census.entries) CHECK(e.classes_formula == e.classes_orbit);
}

TEST_CASE("codim-1 census over F_5") {
  auto census = codim1_census<Fp>(2, kF5);
  // zero matrix plus (p^2 - 1)(p - 1)... counted directly: 1 + 24
  CHECK(census.entries.size() == 25);
  std::uint64_t expected_total = 25 + 24 * 1;
  CHECK(census.total_formula == expected_total);
  CHECK(census.total_orbit == expected_total);
}

TEST_CASE("global H2 decomposition for the point base over F_3") {
  auto pt = families::abelian<Fp>(1, kF3);
  auto rep = global_h2_abelian<Fp>(pt, 2);
  REQUIRE(!rep.truncated);
  // module structures on k^2 over the point are the square-zero matrices
  CHECK(rep.actions.size() == 9);
  for (const auto& entry : rep.actions) {
    Mat<Fp> f = entry.rho[0];
    CHECK(is_zero<Fp>(Mat<Fp>(f * f)));
  }
  // fiber JJ structures on k^2 are enumerated for the non-abelian coproduct
  CHECK(rep.fibers_enumerated);
  CHECK(!rep.fiber_structures.empty());
  for (const auto& fib : rep.fiber_structures) CHECK(is_jacobi_jordan(fib));
}

TEST_CASE("global H2 for h(3) over F_3 contains the trivial-action component with h2 = 2") {
  auto h3 = families::heisenberg<Fp>(1, kF3);
  auto rep = global_h2_abelian<Fp>(h3, 1);
  REQUIRE(!rep.truncated);
  bool found_trivial = false;
  for (const auto& entry : rep.actions) {
    bool trivial = true;
    for (const auto& r : entry.rho)
      if (!is_zero<Fp>(r)) trivial = false;
    if (trivial) {
      found_trivial = true;
      CHECK(entry.h2_dim == 2);
    }
  }
  CHECK(found_trivial);
}

TEST_CASE("oracle equivalence over F_3: class counts match p^h2 per lambda") {
  // dim <= 2 corpus; the lambda sets are found by direct enumeration here
  // (the production entry point guards characteristic 3 away) and each
  // pins lambda = 0
  std::vector<Algebra<Fp>> corpus{families::abelian<Fp>(1, kF3), families::abelian<Fp>(2, kF3),
                                  families::a12<Fp>(kF3)};
  for (const auto& a : corpus) {
    const int n = a.dim();
    std::vector<Vec<Fp>> lambdas;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Vec<Fp> lam(n);
      std::uint64_t t = idx;
      for (int i = 0; i < n; ++i) {
        lam(i) = Fp(static_cast<long long>(t % 3), 3);
        t /= 3;
      }
      if (satisfies_lambda_equation(a, lam)) lambdas.push_back(lam);
    }
    REQUIRE(lambdas.size() == 1);
    REQUIRE(is_zero<Fp>(lambdas[0]));
    for (const auto& lam : lambdas) {
      auto space = coflag_cohomology(a, lam);
      std::unordered_set<std::string> classes;
      for (const auto& theta : all_elements(space.z2, 3))
        classes.insert(encode(reduce_mod(space.b2, theta)));
      std::uint64_t expected = 1;
      for (int k = 0; k < space.h2_dim; ++k) expected *= 3;
      CHECK(classes.size() == expected);
    }
  }
}
