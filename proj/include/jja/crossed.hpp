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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jja/modrep.hpp"

namespace jja {

/// V-valued bilinear map on the base: row (i*n + j) of vals holds the
/// m-vector theta(e_i, e_j).  Unset entries are zero.
template <class S>
struct BilinearVMap {
  int domain_dim{0};
  int codomain_dim{0};
  Mat<S> vals;

  BilinearVMap() = default;
  BilinearVMap(int n, int m)
      : domain_dim(n), codomain_dim(m), vals(Mat<S>::Zero(static_cast<Eigen::Index>(n) * n, m)) {}

  Vec<S> value(int i, int j) const { return vals.row(i * domain_dim + j).transpose(); }
  void set_value(int i, int j, const Vec<S>& v) { vals.row(i * domain_dim + j) = v.transpose(); }
  void set_symmetric(int i, int j, const Vec<S>& v) {
    set_value(i, j, v);
    set_value(j, i, v);
  }
  /// theta(e_i, w) for a coordinate vector w, linear in the second slot.
  Vec<S> value_lin(int i, const Vec<S>& w) const {
    Vec<S> out = Vec<S>::Zero(codomain_dim);
    for (int k = 0; k < domain_dim; ++k)
      if (!(w(k) == S(0))) out += w(k) * value(i, k);
    return out;
  }
  bool symmetric() const {
    for (int i = 0; i < domain_dim; ++i)
      for (int j = i + 1; j < domain_dim; ++j)
        if (!exactly_equal<S>(value(i, j), value(j, i))) return false;
    return true;
  }
  bool operator==(const BilinearVMap& o) const {
    return domain_dim == o.domain_dim && codomain_dim == o.codomain_dim &&
           exactly_equal<S>(vals, o.vals);
  }
};

/// Crossed data (|>, theta, ._V) connecting a base algebra A and a fiber
/// space k^m that itself carries an algebra structure.
template <class S>
struct CrossedData {
  Algebra<S> base;
  int fiber_dim{0};
  ActionData<S> action;    // |> : A x V -> V
  BilinearVMap<S> cocycle; // theta : A x A -> V, symmetric
  Algebra<S> fiber_mult;   // ._V on k^m

  static CrossedData trivial(const Algebra<S>& base, int m) {
    CrossedData d;
    d.base = base;
    d.fiber_dim = m;
    d.action = ActionData<S>::trivial(base, m);
    d.cocycle = BilinearVMap<S>(base.dim(), m);
    d.fiber_mult = Algebra<S>(base.field(), m, fiber_names(m));
    return d;
  }
  static std::vector<std::string> fiber_names(int m) {
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back("v" + std::to_string(i));
    return names;
  }

  bool operator==(const CrossedData& o) const {
    return base == o.base && fiber_dim == o.fiber_dim && cocycle == o.cocycle &&
           fiber_mult == o.fiber_mult && actions_equal(o);
  }
  bool actions_equal(const CrossedData& o) const {
    for (int i = 0; i < base.dim(); ++i)
      if (!exactly_equal<S>(action.rho[i], o.action.rho[i])) return false;
    return true;
  }
};

/// One failed axiom instance: which compatibility failed and on which
/// basis tuple.
struct AxiomDefect {
  std::string axiom;  // "J1".."J4"
  int i{-1}, j{-1}, l{-1};
};

struct CrossedValidation {
  bool ok{true};
  std::vector<AxiomDefect> defects;
  void fail(const std::string& axiom, int i = -1, int j = -1, int l = -1) {
    ok = false;
    defects.push_back({axiom, i, j, l});
  }
};

/// Axioms (J1)-(J4) checked exhaustively on basis tuples.  The base is
/// assumed JJ (commutative in particular), which makes unordered tuples
/// sufficient.
template <class S>
CrossedValidation validate_crossed_system(const CrossedData<S>& d) {
  CrossedValidation rep;
  const int n = d.base.dim(), m = d.fiber_dim;
  // J1: fiber is a JJ algebra and the cocycle is symmetric
  if (!is_commutative(d.fiber_mult) || !jacobi_defects(d.fiber_mult).empty()) rep.fail("J1");
  if (!d.cocycle.symmetric()) rep.fail("J1");
  // J2: rho(ab) + rho_a rho_b + rho_b rho_a + (x -> x . theta(a,b)) = 0
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mat<S> op = d.action.of(d.base.product(i, j)) + d.action.rho[i] * d.action.rho[j] +
                  d.action.rho[j] * d.action.rho[i] +
                  d.fiber_mult.right_mult_matrix(Vec<S>(d.cocycle.value(i, j)));
      if (!is_zero<S>(op)) rep.fail("J2", i, j);
    }
  // J3: a |> (x y) + x (a |> y) + y (a |> x) = 0
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y) {
        Vec<S> r = d.action.rho[i] * d.fiber_mult.product(x, y) +
                   d.fiber_mult.multiply(d.fiber_mult.basis_vector(x),
                                         Vec<S>(d.action.rho[i] * d.fiber_mult.basis_vector(y))) +
                   d.fiber_mult.multiply(d.fiber_mult.basis_vector(y),
                                         Vec<S>(d.action.rho[i] * d.fiber_mult.basis_vector(x)));
        if (!is_zero<S>(r)) rep.fail("J3", i, x, y);
      }
  // J4: cyclic theta(a, b c) plus cyclic a |> theta(b, c) vanishes
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int l = j; l < n; ++l) {
        Vec<S> r = d.cocycle.value_lin(i, d.base.product(j, l)) +
                   d.cocycle.value_lin(j, d.base.product(l, i)) +
                   d.cocycle.value_lin(l, d.base.product(i, j)) +
                   d.action.rho[i] * d.cocycle.value(j, l) +
                   d.action.rho[j] * d.cocycle.value(l, i) +
                   d.action.rho[l] * d.cocycle.value(i, j);
        if (!is_zero<S>(r)) rep.fail("J4", i, j, l);
      }
  return rep;
}

/// The crossed product A # V on k^(n+m): base coordinates first, then the
/// fiber.  (a, x) (b, y) = (a b, theta(a,b) + a |> y + b |> x + x y).
template <class S>
Algebra<S> crossed_product(const CrossedData<S>& d) {
  auto check = validate_crossed_system(d);
  if (!check.ok)
    throw InvalidCrossedSystem("crossed system fails axiom " + check.defects.front().axiom);
  const int n = d.base.dim(), m = d.fiber_dim, big = n + m;
  std::vector<std::string> names = d.base.names();
  for (const auto& vn : d.fiber_mult.names()) names.push_back(vn);
  Algebra<S> e(d.base.field(), big, names);
  auto embed = [&](const Vec<S>& a_part, const Vec<S>& v_part) {
    Vec<S> w = Vec<S>::Zero(big);
    if (a_part.size()) w.head(n) = a_part;
    if (v_part.size()) w.tail(m) = v_part;
    return w;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e.set_product(i, j, embed(d.base.product(i, j), d.cocycle.value(i, j)));
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < m; ++x) {
      Vec<S> act = d.action.rho[i] * d.fiber_mult.basis_vector(x);
      e.set_product(i, n + x, embed(Vec<S>(), act));
      e.set_product(n + x, i, embed(Vec<S>(), act));
    }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) e.set_product(n + x, n + y, embed(Vec<S>(), d.fiber_mult.product(x, y)));
  return e;
}

/// Semidirect product: the crossed product with a trivial cocycle, guarded
/// by the module axiom, the fiber axioms and the compatibility between
/// them.
template <class S>
Algebra<S> semidirect_product(const Algebra<S>& base, const ActionData<S>& action,
                              const Algebra<S>& fiber) {
  CrossedData<S> d;
  d.base = base;
  d.fiber_dim = fiber.dim();
  d.action = action;
  d.cocycle = BilinearVMap<S>(base.dim(), fiber.dim());
  d.fiber_mult = fiber;
  if (!is_jj_module(action).holds)
    throw InvalidSemidirectSystem("the action is not a JJ module structure");
  auto check = validate_crossed_system(d);
  if (!check.ok)
    throw InvalidSemidirectSystem("semidirect system fails axiom " + check.defects.front().axiom);
  return crossed_product(d);
}

/// Extract the crossed system carried by a surjection pi : E -> A with a
/// linear section s: the action is s(a) x, the cocycle s(a) s(b) - s(ab),
/// the fiber multiplication the restriction to Ker(pi) in its canonical
/// basis.
template <class S>
CrossedData<S> recognize_extension(const Algebra<S>& e, const Algebra<S>& a, const Mat<S>& pi,
                                   const Mat<S>& s) {
  const int bign = e.dim(), n = a.dim();
  if (pi.rows() != n || pi.cols() != bign || s.rows() != bign || s.cols() != n)
    throw DimensionMismatch("recognize_extension shapes");
  if (!exactly_equal<S>(Mat<S>(pi * s), Mat<S>(Mat<S>::Identity(n, n))))
    throw NotSection("pi o s is not the identity");
  for (int i = 0; i < bign; ++i)
    for (int j = 0; j < bign; ++j) {
      Vec<S> lhs = pi * e.product(i, j);
      Vec<S> rhs = a.multiply(Vec<S>(pi.col(i)), Vec<S>(pi.col(j)));
      if (!exactly_equal<S>(lhs, rhs)) throw NotAlgebraMap("pi does not respect products");
    }
  Subspace<S> ker = kernel_subspace<S>(pi);
  const int m = ker.dim();
  if (m != bign - n) throw NotAlgebraMap("pi is not surjective");
  Mat<S> kcols = ker.basis().transpose();  // columns = canonical kernel basis
  auto coords = [&](const Vec<S>& w) {
    auto sol = solve<S>(kcols, w);
    if (!sol.consistent) throw NotAlgebraMap("product leaves the kernel");
    return sol.particular;
  };
  CrossedData<S> d;
  d.base = a;
  d.fiber_dim = m;
  d.cocycle = BilinearVMap<S>(n, m);
  std::vector<Mat<S>> rho(n, Mat<S>::Zero(m, m));
  for (int i = 0; i < n; ++i) {
    Vec<S> sa = s.col(i);
    for (int x = 0; x < m; ++x) rho[i].col(x) = coords(e.multiply(sa, Vec<S>(kcols.col(x))));
    for (int j = 0; j < n; ++j) {
      Vec<S> sab = s * a.product(i, j);
      d.cocycle.set_value(i, j, coords(Vec<S>(e.multiply(sa, Vec<S>(s.col(j))) - sab)));
    }
  }
  d.action = ActionData<S>(a, m, std::move(rho));
  d.fiber_mult = Algebra<S>(e.field(), m, CrossedData<S>::fiber_names(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      d.fiber_mult.set_product(x, y, coords(e.multiply(Vec<S>(kcols.col(x)), Vec<S>(kcols.col(y)))));
  return d;
}

/// Canonical projection and section of a crossed product built by
/// crossed_product (base block first).
template <class S>
Mat<S> crossed_projection(int n, int m) {
  Mat<S> pi = Mat<S>::Zero(n, n + m);
  pi.leftCols(n) = Mat<S>::Identity(n, n);
  return pi;
}
template <class S>
Mat<S> crossed_section(int n, int m) {
  Mat<S> s = Mat<S>::Zero(n + m, n);
  s.topRows(n) = Mat<S>::Identity(n, n);
  return s;
}

template <class S>
struct MorphismVerdict {
  bool morphism{false};
  bool iso{false};
  std::vector<AxiomDefect> defects;  // axioms "CH1".."CH3"
};

/// Decide whether psi_r(a, x) = (a, r(a) + x) is an algebra map between
/// the two crossed products; when it is, it is automatically an
/// isomorphism with inverse psi_{-r}.  r is m x n, column i = r(e_i).
template <class S>
MorphismVerdict<S> morphism_from_r(const CrossedData<S>& d, const CrossedData<S>& dp,
                                   const Mat<S>& r) {
  const int n = d.base.dim(), m = d.fiber_dim;
  if (dp.base.dim() != n || dp.fiber_dim != m) throw DimensionMismatch("crossed data shapes");
  if (r.rows() != m || r.cols() != n) throw DimensionMismatch("r must be fiber_dim x base_dim");
  MorphismVerdict<S> out;
  out.morphism = true;
  if (!(d.fiber_mult == dp.fiber_mult)) {
    out.morphism = false;
    out.defects.push_back({"CH1", -1, -1, -1});
  }
  for (int i = 0; i < n; ++i) {
    // CH2: rho_i = rho'_i + left-mult by r(e_i) in the target fiber
    Mat<S> rhs = dp.action.rho[i] + dp.fiber_mult.left_mult_matrix(Vec<S>(r.col(i)));
    if (!exactly_equal<S>(d.action.rho[i], rhs)) {
      out.morphism = false;
      out.defects.push_back({"CH2", i, -1, -1});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vec<S> lhs = d.cocycle.value(i, j) + r * d.base.product(i, j);
      Vec<S> rhs = dp.cocycle.value(i, j) + dp.action.rho[i] * r.col(j) +
                   dp.action.rho[j] * r.col(i) +
                   dp.fiber_mult.multiply(Vec<S>(r.col(i)), Vec<S>(r.col(j)));
      if (!exactly_equal<S>(lhs, rhs)) {
        out.morphism = false;
        out.defects.push_back({"CH3", i, j, -1});
      }
    }
  out.iso = out.morphism;
  return out;
}

/// The explicit matrix of psi_r on k^(n+m) in crossed-product coordinates.
template <class S>
Mat<S> psi_r_matrix(int n, int m, const Mat<S>& r) {
  Mat<S> psi = Mat<S>::Identity(n + m, n + m);
  psi.block(n, 0, m, n) = r;
  return psi;
}

enum class CohomologousKind { Yes, No, Unknown };

template <class S>
struct CohomologousVerdict {
  CohomologousKind kind{CohomologousKind::Unknown};
  std::optional<Mat<S>> r;
};

/// Decide the cohomologous relation.  The fiber multiplications must agree
/// literally.  With an abelian fiber the quadratic term drops: the action
/// must then match and the cocycle condition is an affine-linear system in
/// r, solved exactly.  With a non-abelian fiber the system is quadratic in
/// r and is settled by exhaustive search over F_p when p^(n m) fits the
/// cap, otherwise the verdict is unknown.
template <class S>
CohomologousVerdict<S> are_cohomologous(const CrossedData<S>& d, const CrossedData<S>& dp,
                                        std::uint64_t cap = 200000) {
  const int n = d.base.dim(), m = d.fiber_dim;
  if (dp.base.dim() != n || dp.fiber_dim != m) throw DimensionMismatch("crossed data shapes");
  CohomologousVerdict<S> out;
  if (!(d.fiber_mult == dp.fiber_mult)) {
    out.kind = CohomologousKind::No;
    return out;
  }
  const bool fiber_abelian = is_zero<S>(d.fiber_mult.gamma());
  if (fiber_abelian) {
    if (!d.actions_equal(dp)) {
      out.kind = CohomologousKind::No;
      return out;
    }
    // theta(i,j) - theta'(i,j) = rho'_i r_j + rho'_j r_i - r(gamma(i,j))
    const int unknowns = m * n;  // r(e_q) coordinate t at column q*m + t
    const int pairs = n * (n + 1) / 2;
    Mat<S> sys = Mat<S>::Zero(static_cast<Eigen::Index>(pairs) * m, unknowns);
    Vec<S> rhs(static_cast<Eigen::Index>(pairs) * m);
    int row0 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Vec<S> diff = d.cocycle.value(i, j) - dp.cocycle.value(i, j);
        Vec<S> gij = d.base.product(i, j);
        for (int t = 0; t < m; ++t) {
          for (int ssub = 0; ssub < m; ++ssub) {
            sys(row0 + t, j * m + ssub) += dp.action.rho[i](t, ssub);
            sys(row0 + t, i * m + ssub) += dp.action.rho[j](t, ssub);
          }
          for (int q = 0; q < n; ++q) sys(row0 + t, q * m + t) -= gij(q);
          rhs(row0 + t) = diff(t);
        }
        row0 += m;
      }
    auto sol = solve<S>(sys, rhs);
    if (!sol.consistent) {
      out.kind = CohomologousKind::No;
      return out;
    }
    Mat<S> r(m, n);
    for (int q = 0; q < n; ++q)
      for (int t = 0; t < m; ++t) r(t, q) = sol.particular(q * m + t);
    out.kind = CohomologousKind::Yes;
    out.r = std::move(r);
    return out;
  }
  if constexpr (scalar_traits<S>::prime_field) {
    const std::uint64_t p = d.base.field().modulus;
    double bits = n * m * std::log2(double(p));
    if (bits <= std::log2(double(cap))) {
      std::uint64_t total = 1;
      for (int i = 0; i < n * m; ++i) total *= p;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        Mat<S> r(m, n);
        std::uint64_t t = idx;
        for (int q = 0; q < n; ++q)
          for (int tt = 0; tt < m; ++tt) {
            r(tt, q) = Fp(static_cast<long long>(t % p), static_cast<std::uint32_t>(p));
            t /= p;
          }
        if (morphism_from_r(d, dp, r).morphism) {
          out.kind = CohomologousKind::Yes;
          out.r = std::move(r);
          return out;
        }
      }
      out.kind = CohomologousKind::No;
      return out;
    }
  }
  return out;  // unknown
}

}  // namespace jja
