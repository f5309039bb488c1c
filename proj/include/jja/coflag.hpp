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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "jja/cohomology.hpp"
#include "jja/iso.hpp"

namespace jja {

/// A co-flag datum (lambda, theta) of a JJ algebra: a functional with
/// lambda(a b) = -2 lambda(a) lambda(b) and a symmetric form with the
/// weighted cocycle condition.
template <class S>
struct CoflagDatum {
  Algebra<S> base;
  Vec<S> lambda;
  Mat<S> theta;

  CoflagDatum() = default;
  CoflagDatum(Algebra<S> base_, Vec<S> lambda_, Mat<S> theta_)
      : base(std::move(base_)), lambda(std::move(lambda_)), theta(std::move(theta_)) {
    const int n = base.dim();
    if (lambda.size() != n || theta.rows() != n || theta.cols() != n)
      throw DimensionMismatch("co-flag datum shapes");
  }
};

template <class S>
bool is_valid_coflag_datum(const CoflagDatum<S>& d) {
  const int n = d.base.dim();
  if (!exactly_equal<S>(d.theta, Mat<S>(d.theta.transpose()))) return false;
  if (!satisfies_lambda_equation(d.base, d.lambda)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int l = j; l < n; ++l) {
        auto term = [&](int x, int y, int z) {
          Vec<S> g = d.base.product(y, z);
          S acc = S(0);
          for (int k = 0; k < n; ++k) acc += g(k) * d.theta(x, k);
          return S(acc + d.lambda(x) * d.theta(y, z));
        };
        if (!(term(i, j, l) + term(j, l, i) + term(l, i, j) == S(0))) return false;
      }
  return true;
}

/// A_(lambda, theta): base coordinates first, the adjoined generator
/// last, with e_i e_j = e_i e_j + theta(i,j) f, e_i f = lambda(e_i) f and
/// f^2 = 0.
template <class S>
Algebra<S> build_coflag_algebra(const CoflagDatum<S>& d) {
  if (!is_valid_coflag_datum(d)) throw InvalidCoflagDatum("co-flag datum fails its axioms");
  const int n = d.base.dim();
  std::vector<std::string> names = d.base.names();
  std::string newname = "f";
  for (const char* candidate : {"f", "y", "w", "u"})
    if (std::find(names.begin(), names.end(), candidate) == names.end()) {
      newname = candidate;
      break;
    }
  names.push_back(newname);
  Algebra<S> e(d.base.field(), n + 1, names);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec<S> w = Vec<S>::Zero(n + 1);
      w.head(n) = d.base.product(i, j);
      w(n) = d.theta(i, j);
      e.set_product(i, j, w);
    }
    Vec<S> act = Vec<S>::Zero(n + 1);
    act(n) = d.lambda(i);
    e.set_product(i, n, act);
    e.set_product(n, i, act);
  }
  return e;
}

template <class S>
struct Gh2Verdict {
  bool equivalent{false};
  std::optional<Vec<S>> t;
};

/// Stab/co-stab equivalence: lambda must agree and theta - theta' must be
/// the coboundary of some t, solved exactly.
template <class S>
Gh2Verdict<S> gh2_equivalent(const CoflagDatum<S>& d, const CoflagDatum<S>& dp) {
  const int n = d.base.dim();
  if (dp.base.dim() != n) throw DimensionMismatch("different bases");
  Gh2Verdict<S> out;
  if (!exactly_equal<S>(d.lambda, dp.lambda)) return out;
  const int pairs = tri_count(n);
  Mat<S> sys = Mat<S>::Zero(pairs, n);
  Vec<S> rhs(pairs);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int row = tri_index(n, i, j);
      sys(row, j) += d.lambda(i);
      sys(row, i) += d.lambda(j);
      Vec<S> g = d.base.product(i, j);
      for (int q = 0; q < n; ++q) sys(row, q) -= g(q);
      rhs(row) = d.theta(i, j) - dp.theta(i, j);
    }
  auto sol = solve<S>(sys, rhs);
  if (!sol.consistent) return out;
  out.equivalent = true;
  out.t = sol.particular;
  return out;
}

/// An element of the automorphism group G(A, (lambda, theta)): the triple
/// (s0, psi, r) with s0 in k*, psi in Aut(A) and r in A*.
template <class S>
struct AutElement {
  S s0;
  Mat<S> psi;
  Vec<S> r;
};

/// Group law (s0, psi, r) * (s0', psi', r') = (s0 s0', psi psi',
/// r o psi' + s0 r'); unit (1, Id, 0); inverse (s0^-1, psi^-1,
/// -s0^-1 (r o psi^-1)).
template <class S>
AutElement<S> aut_compose(const AutElement<S>& x, const AutElement<S>& y) {
  return {S(x.s0 * y.s0), Mat<S>(x.psi * y.psi), Vec<S>(y.psi.transpose() * x.r + x.s0 * y.r)};
}
template <class S>
AutElement<S> aut_identity(int n, const FieldSpec& f) {
  return {scalar_from_int<S>(f, 1), Mat<S>(Mat<S>::Identity(n, n)), Vec<S>(Vec<S>::Zero(n))};
}
template <class S>
AutElement<S> aut_inverse(const AutElement<S>& x) {
  S inv = S(1) / x.s0;
  Mat<S> psi_inv = inverse<S>(x.psi);
  return {inv, psi_inv, Vec<S>(-(inv * (psi_inv.transpose() * x.r)))};
}

namespace detail {

/// Affine system in (s0, r): theta(i,j) s0 - lambda_i r_j - lambda_j r_i
/// + r(gamma(i,j)) = theta'(psi e_i, psi e_j).  Unknown layout: s0 first,
/// then the n coefficients of r.
template <class S>
std::pair<Mat<S>, Vec<S>> cp_system(const CoflagDatum<S>& d, const CoflagDatum<S>& dp,
                                    const Mat<S>& psi) {
  const int n = d.base.dim();
  const int pairs = tri_count(n);
  Mat<S> sandwich = psi.transpose() * dp.theta * psi;
  Mat<S> sys = Mat<S>::Zero(pairs, n + 1);
  Vec<S> rhs(pairs);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int row = tri_index(n, i, j);
      sys(row, 0) = d.theta(i, j);
      sys(row, 1 + j) -= d.lambda(i);
      sys(row, 1 + i) -= d.lambda(j);
      Vec<S> g = d.base.product(i, j);
      for (int q = 0; q < n; ++q) sys(row, 1 + q) += g(q);
      rhs(row) = sandwich(i, j);
    }
  return {std::move(sys), std::move(rhs)};
}

/// A solution of the system with a nonzero s0 coordinate, when one exists.
template <class S>
std::optional<Vec<S>> solve_with_unit_s0(const Mat<S>& sys, const Vec<S>& rhs) {
  auto sol = solve<S>(sys, rhs);
  if (!sol.consistent) return std::nullopt;
  Vec<S> x = sol.particular;
  if (!(x(0) == S(0))) return x;
  Mat<S> ker = kernel_basis<S>(sys);
  for (Eigen::Index c = 0; c < ker.cols(); ++c)
    if (!(ker(0, c) == S(0))) return Vec<S>(x + ker.col(c));
  return std::nullopt;
}

}  // namespace detail

enum class CpKind { Yes, No, Unknown };

template <class S>
struct CpVerdict {
  CpKind kind{CpKind::Unknown};
  std::optional<AutElement<S>> witness;
};

/// Plain-isomorphism equivalence of co-flag data: search the supplied
/// automorphisms for psi with lambda = lambda' o psi and a solution
/// (s0 != 0, r) of the affine system.  `no` needs an exhaustive source.
template <class S>
CpVerdict<S> cp_equivalent(const CoflagDatum<S>& d, const CoflagDatum<S>& dp,
                           const std::vector<Mat<S>>& aut_source, bool exhaustive) {
  const int n = d.base.dim();
  CpVerdict<S> out;
  for (const auto& psi : aut_source) {
    if (!exactly_equal<S>(Vec<S>(psi.transpose() * dp.lambda), d.lambda)) continue;
    auto [sys, rhs] = detail::cp_system(d, dp, psi);
    if (auto x = detail::solve_with_unit_s0(sys, rhs)) {
      out.kind = CpKind::Yes;
      out.witness = AutElement<S>{(*x)(0), psi, Vec<S>(x->tail(n))};
      return out;
    }
  }
  out.kind = exhaustive ? CpKind::No : CpKind::Unknown;
  return out;
}

template <class S>
struct CoflagAutGroup {
  std::uint64_t order{0};
  std::vector<AutElement<S>> elements;
  bool elements_complete{true};
};

/// G(A, (lambda, theta)) over F_p: for each base automorphism fixing
/// lambda, the (s0, r) solutions form an affine set counted exactly; the
/// elements themselves are listed up to `element_limit`.
template <class S>
CoflagAutGroup<S> automorphism_group(const CoflagDatum<S>& d, const std::vector<Mat<S>>& auts,
                                     std::uint64_t element_limit = 200000) {
  static_assert(scalar_traits<S>::prime_field, "group enumeration needs a finite field");
  const std::uint64_t p = d.base.field().modulus;
  const int n = d.base.dim();
  CoflagAutGroup<S> out;
  for (const auto& psi : auts) {
    if (!exactly_equal<S>(Vec<S>(psi.transpose() * d.lambda), d.lambda)) continue;
    auto [sys, rhs] = detail::cp_system(d, d, psi);
    auto sol = solve<S>(sys, rhs);
    if (!sol.consistent) continue;
    Mat<S> ker = kernel_basis<S>(sys);
    const int kdim = static_cast<int>(ker.cols());
    std::uint64_t all = 1;
    for (int i = 0; i < kdim; ++i) all *= p;
    // count solutions with s0 = 0: an affine subsystem
    Mat<S> sys0(sys.rows() + 1, sys.cols());
    sys0.topRows(sys.rows()) = sys;
    sys0.row(sys.rows()).setZero();
    sys0(sys.rows(), 0) = S(1);
    Vec<S> rhs0(rhs.size() + 1);
    rhs0.head(rhs.size()) = rhs;
    rhs0(rhs.size()) = S(0);
    auto szero = solve<S>(sys0, rhs0);
    std::uint64_t zero_count = 0;
    if (szero.consistent) {
      zero_count = 1;
      int k0 = static_cast<int>(kernel_basis<S>(sys0).cols());
      for (int i = 0; i < k0; ++i) zero_count *= p;
    }
    out.order += all - zero_count;
    // explicit elements while the budget lasts
    if (out.elements_complete && out.order <= element_limit) {
      for (std::uint64_t idx = 0; idx < all; ++idx) {
        Vec<S> x = sol.particular;
        std::uint64_t t = idx;
        for (int k = 0; k < kdim; ++k) {
          x += Fp(static_cast<long long>(t % p), static_cast<std::uint32_t>(p)) * ker.col(k);
          t /= p;
        }
        if (x(0) == S(0)) continue;
        out.elements.push_back(AutElement<S>{x(0), psi, Vec<S>(x.tail(n))});
      }
    } else {
      out.elements_complete = false;
    }
  }
  if (!out.elements_complete) out.elements.clear();
  return out;
}

enum class OrbitKind { Yes, No, Unknown };

template <class S>
struct OrbitVerdict {
  OrbitKind kind{OrbitKind::Unknown};
  std::optional<Mat<S>> psi;
};

/// A_lambda and A_lambda' are isomorphic iff lambda = lambda' o psi for
/// some base automorphism (semidirect classification).
template <class S>
OrbitVerdict<S> semidirect_classify(const Algebra<S>& a, const Vec<S>& lam, const Vec<S>& lam_p,
                                    const std::vector<Mat<S>>& aut_source, bool exhaustive) {
  if (!satisfies_lambda_equation(a, lam) || !satisfies_lambda_equation(a, lam_p))
    throw InvalidLambda("semidirect_classify needs admissible lambdas");
  OrbitVerdict<S> out;
  for (const auto& psi : aut_source)
    if (exactly_equal<S>(Vec<S>(psi.transpose() * lam_p), lam)) {
      out.kind = OrbitKind::Yes;
      out.psi = psi;
      return out;
    }
  out.kind = exhaustive ? OrbitKind::No : OrbitKind::Unknown;
  return out;
}

}  // namespace jja
