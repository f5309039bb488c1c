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
#include <utility>
#include <vector>

#include "jja/algebra.hpp"

namespace jja {

/// An action of A on k^m, stored as one m x m operator per basis vector of
/// A: rho[i] is x -> e_i |> x.  Bilinearity is structural; the module
/// axiom is a separate check.
template <class S>
struct ActionData {
  Algebra<S> base;
  int space_dim{0};
  std::vector<Mat<S>> rho;

  ActionData() = default;
  ActionData(Algebra<S> base_, int m, std::vector<Mat<S>> rho_)
      : base(std::move(base_)), space_dim(m), rho(std::move(rho_)) {
    if (static_cast<int>(rho.size()) != base.dim()) throw DimensionMismatch("one operator per basis vector");
    for (const auto& r : rho)
      if (r.rows() != m || r.cols() != m) throw DimensionMismatch("action operator shape");
  }

  static ActionData trivial(Algebra<S> base_, int m) {
    std::vector<Mat<S>> ops(base_.dim(), Mat<S>::Zero(m, m));
    return ActionData(std::move(base_), m, std::move(ops));
  }

  /// Operator of v |> (-) for a coordinate vector v of the base.
  Mat<S> of(const Vec<S>& v) const {
    Mat<S> out = Mat<S>::Zero(space_dim, space_dim);
    for (int i = 0; i < base.dim(); ++i)
      if (!(v(i) == S(0))) out += v(i) * rho[i];
    return out;
  }
};

template <class S>
struct ModuleVerdict {
  bool holds{true};
  std::optional<std::pair<int, int>> witness;  // failing basis pair (i, j)
  Mat<S> defect;
};

/// (a b) |> x = -a |> (b |> x) - b |> (a |> x) on basis pairs, which by
/// bilinearity settles the axiom everywhere.
template <class S>
ModuleVerdict<S> is_jj_module(const ActionData<S>& d) {
  const int n = d.base.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mat<S> lhs = d.of(d.base.product(i, j));
      Mat<S> rhs = -(d.rho[i] * d.rho[j] + d.rho[j] * d.rho[i]);
      if (!exactly_equal<S>(lhs, rhs)) return {false, std::make_pair(i, j), Mat<S>(lhs - rhs)};
    }
  return {};
}

template <class S>
struct Representation {
  std::vector<Mat<S>> phi;       // phi_i = -rho_i
  bool jordan_morphism{true};    // phi(ab) = phi(a) phi(b) + phi(b) phi(a)
  std::optional<std::pair<int, int>> witness;
};

template <class S>
Representation<S> to_representation(const ActionData<S>& d) {
  Representation<S> rep;
  rep.phi.reserve(d.rho.size());
  for (const auto& r : d.rho) rep.phi.push_back(Mat<S>(-r));
  const int n = d.base.dim();
  auto phi_of = [&](const Vec<S>& v) {
    Mat<S> out = Mat<S>::Zero(d.space_dim, d.space_dim);
    for (int i = 0; i < n; ++i)
      if (!(v(i) == S(0))) out += v(i) * rep.phi[i];
    return out;
  };
  for (int i = 0; i < n && rep.jordan_morphism; ++i)
    for (int j = i; j < n; ++j) {
      Mat<S> lhs = phi_of(d.base.product(i, j));
      Mat<S> rhs = rep.phi[i] * rep.phi[j] + rep.phi[j] * rep.phi[i];
      if (!exactly_equal<S>(lhs, rhs)) {
        rep.jordan_morphism = false;
        rep.witness = std::make_pair(i, j);
        break;
      }
    }
  return rep;
}

template <class S>
struct CanonicalActions {
  ActionData<S> regular;  // a |> x = a x on A itself
  ActionData<S> dual;     // (a |> a*)(x) = a*(a x) on A*, transposed matrices
};

template <class S>
CanonicalActions<S> canonical_actions(const Algebra<S>& a) {
  if (!is_jacobi_jordan(a)) throw NotJacobiJordan("canonical actions need a JJ algebra");
  std::vector<Mat<S>> reg, dual;
  for (int i = 0; i < a.dim(); ++i) {
    Mat<S> l = a.left_mult_matrix(i);
    reg.push_back(l);
    dual.push_back(Mat<S>(l.transpose()));
  }
  return {ActionData<S>(a, a.dim(), std::move(reg)), ActionData<S>(a, a.dim(), std::move(dual))};
}

/// Kernel of the regular representation; a trivial kernel certifies a
/// faithful representation, a nonzero one is only a certificate for the
/// regular action.
template <class S>
Subspace<S> regular_representation_kernel(const Algebra<S>& a) {
  const int n = a.dim();
  // columns index the acting element: kernel of a -> L_a
  Mat<S> op(n * n, n);
  for (int j = 0; j < n; ++j) {
    Mat<S> l = a.left_mult_matrix(j);
    for (int r = 0; r < n; ++r) op.block(r * n, j, n, 1) = l.col(r);
  }
  return kernel_subspace<S>(op);
}

}  // namespace jja
