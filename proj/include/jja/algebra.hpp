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

#include "jja/linalg.hpp"

namespace jja {

/// Finite-dimensional algebra given by structure constants: the row
/// (i*n + j) of gamma holds the coordinates of e_i * e_j.  Immutable in
/// spirit; construct it once via set_product and treat it as a value.
template <class S>
class Algebra {
 public:
  Algebra() = default;
  Algebra(FieldSpec field, int n, std::vector<std::string> names = {})
      : field_(field), n_(n), names_(std::move(names)) {
    if (names_.empty()) {
      names_.reserve(n);
      for (int i = 1; i <= n; ++i) names_.push_back("b" + std::to_string(i));
    }
    if (static_cast<int>(names_.size()) != n) throw DimensionMismatch("basis name count");
    gamma_ = Mat<S>::Zero(static_cast<Eigen::Index>(n) * n, n);
  }

  const FieldSpec& field() const { return field_; }
  int dim() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const Mat<S>& gamma() const { return gamma_; }

  Vec<S> product(int i, int j) const { return gamma_.row(i * n_ + j).transpose(); }
  void set_product(int i, int j, const Vec<S>& value) {
    if (value.size() != n_) throw DimensionMismatch("set_product");
    for (int k = 0; k < n_; ++k)
      gamma_(i * n_ + j, k) = scalar_traits<S>::canonical(field_, value(k));
  }
  void set_product_symmetric(int i, int j, const Vec<S>& value) {
    set_product(i, j, value);
    set_product(j, i, value);
  }

  Vec<S> basis_vector(int i) const {
    Vec<S> e = Vec<S>::Zero(n_);
    e(i) = S(1);
    return e;
  }
  S zero_scalar() const { return scalar_from_int<S>(field_, 0); }

  /// Bilinear extension of gamma to arbitrary coordinate vectors.
  Vec<S> multiply(const Vec<S>& u, const Vec<S>& v) const {
    if (u.size() != n_ || v.size() != n_) throw DimensionMismatch("multiply");
    Vec<S> out = Vec<S>::Zero(n_);
    for (int i = 0; i < n_; ++i) {
      if (u(i) == S(0)) continue;
      for (int j = 0; j < n_; ++j) {
        if (v(j) == S(0)) continue;
        out += (u(i) * v(j)) * product(i, j);
      }
    }
    return out;
  }

  /// Matrix of x -> e_i * x.
  Mat<S> left_mult_matrix(int i) const {
    Mat<S> l(n_, n_);
    for (int j = 0; j < n_; ++j) l.col(j) = product(i, j);
    return l;
  }
  /// Matrix of x -> x * e_i.
  Mat<S> right_mult_matrix(int i) const {
    Mat<S> r(n_, n_);
    for (int j = 0; j < n_; ++j) r.col(j) = product(j, i);
    return r;
  }
  /// Matrix of x -> v * x for a coordinate vector v.
  Mat<S> left_mult_matrix(const Vec<S>& v) const {
    Mat<S> l = Mat<S>::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
      if (!(v(i) == S(0))) l += v(i) * left_mult_matrix(i);
    return l;
  }
  /// Matrix of x -> x * v for a coordinate vector v.
  Mat<S> right_mult_matrix(const Vec<S>& v) const {
    Mat<S> r = Mat<S>::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
      if (!(v(i) == S(0))) r += v(i) * right_mult_matrix(i);
    return r;
  }

  bool operator==(const Algebra& o) const {
    return field_ == o.field_ && n_ == o.n_ && exactly_equal<S>(gamma_, o.gamma_);
  }
  bool operator!=(const Algebra& o) const { return !(*this == o); }

 private:
  FieldSpec field_;
  int n_{0};
  std::vector<std::string> names_;
  Mat<S> gamma_;
};

template <class S>
struct JacobiDefect {
  int i, j, l;
  Vec<S> residual;
};

template <class S>
bool is_commutative(const Algebra<S>& a) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      if (!exactly_equal<S>(a.product(i, j), a.product(j, i))) return false;
  return true;
}

/// Cyclic Jacobi sum e_i(e_j e_l) + e_j(e_l e_i) + e_l(e_i e_j) on every
/// ordered basis triple; trilinearity makes basis triples sufficient.
template <class S>
std::vector<JacobiDefect<S>> jacobi_defects(const Algebra<S>& a) {
  std::vector<JacobiDefect<S>> defects;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        Vec<S> r = a.multiply(a.basis_vector(i), a.product(j, l)) +
                   a.multiply(a.basis_vector(j), a.product(l, i)) +
                   a.multiply(a.basis_vector(l), a.product(i, j));
        if (!is_zero<S>(r)) defects.push_back({i, j, l, std::move(r)});
      }
  return defects;
}

template <class S>
bool is_jacobi_jordan(const Algebra<S>& a) {
  return is_commutative(a) && jacobi_defects(a).empty();
}

template <class S>
struct LeibnizVerdict {
  bool holds{true};
  int i{-1}, j{-1}, l{-1};  // witness triple when it fails
};

/// (a b) c = a (b c) + (a c) b, checked on all ordered basis triples.
template <class S>
LeibnizVerdict<S> is_leibniz(const Algebra<S>& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        Vec<S> lhs = a.multiply(a.product(i, j), a.basis_vector(l));
        Vec<S> rhs = a.multiply(a.basis_vector(i), a.product(j, l)) +
                     a.multiply(a.product(i, l), a.basis_vector(j));
        if (!exactly_equal<S>(lhs, rhs)) return {false, i, j, l};
      }
  return {};
}

/// Jordan identity (a^2 b) a = a^2 (b a).  The identity is not multilinear
/// in a, so a runs over the probe set of basis vectors and pairwise sums
/// while b runs over the basis.
template <class S>
bool is_jordan(const Algebra<S>& a) {
  if (!is_commutative(a)) throw NotCommutative("Jordan identity needs a commutative algebra");
  const int n = a.dim();
  std::vector<Vec<S>> probes;
  for (int i = 0; i < n; ++i) probes.push_back(a.basis_vector(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) probes.push_back(Vec<S>(a.basis_vector(i) + a.basis_vector(j)));
  for (const auto& x : probes) {
    Vec<S> sq = a.multiply(x, x);
    for (int b = 0; b < n; ++b) {
      Vec<S> eb = a.basis_vector(b);
      Vec<S> lhs = a.multiply(a.multiply(sq, eb), x);
      Vec<S> rhs = a.multiply(sq, a.multiply(eb, x));
      if (!exactly_equal<S>(lhs, rhs)) return false;
    }
  }
  return true;
}

/// Span of all pairwise products of basis vectors of two subspaces.
template <class S>
Subspace<S> subspace_product(const Algebra<S>& a, const Subspace<S>& x, const Subspace<S>& y) {
  Mat<S> gens(x.dim() * y.dim(), a.dim());
  int r = 0;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < y.dim(); ++j)
      gens.row(r++) = a.multiply(x.basis_vector(i), y.basis_vector(j)).transpose();
  return Subspace<S>::span_of_rows(gens);
}

struct SeriesReport {
  std::vector<int> derived_series_dims;     // dims of A^(1), A^(2), ...
  std::vector<int> lower_central_dims;      // dims of A^1 = A, A^2, ...
  std::optional<int> solvability_step;      // least m with A^(m) = 0
  std::optional<int> nilpotency_step;       // least m with A^m = 0
};

/// Derived series A^(n+1) = (A^(n))' and lower central series
/// A^(n+1) = sum_i A^i A^(n+1-i); both run until they hit zero or repeat.
template <class S>
SeriesReport series(const Algebra<S>& a) {
  SeriesReport rep;
  const int n = a.dim();
  auto full = Subspace<S>::full(n);

  Subspace<S> d = subspace_product(a, full, full);  // A^(1)
  while (true) {
    rep.derived_series_dims.push_back(d.dim());
    if (d.dim() == 0) {
      rep.solvability_step = static_cast<int>(rep.derived_series_dims.size());
      break;
    }
    Subspace<S> next = subspace_product(a, d, d);
    if (next == d) break;  // stabilized above zero: not solvable
    d = next;
  }

  std::vector<Subspace<S>> lc{full};  // lc[k] = A^{k+1}
  rep.lower_central_dims.push_back(n);
  if (n == 0) rep.nilpotency_step = 1;
  while (!rep.nilpotency_step) {
    const int k = static_cast<int>(lc.size());  // computing A^{k+1}
    Subspace<S> next = Subspace<S>::zero(n);
    for (int i = 1; i <= k; ++i)
      next = sum(next, subspace_product(a, lc[i - 1], lc[k - i]));
    rep.lower_central_dims.push_back(next.dim());
    if (next.dim() == 0) {
      rep.nilpotency_step = k + 1;
      break;
    }
    if (next == lc.back()) break;  // stabilized above zero: not nilpotent
    lc.push_back(next);
  }
  return rep;
}

/// Z(A) = { z : z A = A z = 0 }, the exact kernel of the stacked left and
/// right multiplication operators.
template <class S>
Subspace<S> leibniz_center(const Algebra<S>& a) {
  const int n = a.dim();
  if (n == 0) return Subspace<S>::zero(0);
  Mat<S> stacked(2 * n * n, n);
  for (int i = 0; i < n; ++i) {
    stacked.middleRows(i * n, n) = a.left_mult_matrix(i);
    stacked.middleRows((n + i) * n, n) = a.right_mult_matrix(i);
  }
  return kernel_subspace<S>(stacked);
}

/// True iff the derived subspace is an abelian subalgebra.
template <class S>
bool is_metabelian(const Algebra<S>& a) {
  auto full = Subspace<S>::full(a.dim());
  auto derived = subspace_product(a, full, full);
  for (int i = 0; i < derived.dim(); ++i)
    for (int j = i; j < derived.dim(); ++j)
      if (!is_zero<S>(a.multiply(derived.basis_vector(i), derived.basis_vector(j)))) return false;
  return true;
}

template <class S>
struct AlgebraReport {
  bool commutative{false};
  std::vector<JacobiDefect<S>> jacobi_defects;
  bool jacobi{false};
  bool leibniz{false};
  bool jordan{false};  // only meaningful when commutative
  SeriesReport series;
  Subspace<S> center;
  bool metabelian{false};
  bool jacobi_jordan() const { return commutative && jacobi; }
};

template <class S>
AlgebraReport<S> analyze(const Algebra<S>& a) {
  AlgebraReport<S> rep;
  rep.commutative = is_commutative(a);
  rep.jacobi_defects = jacobi_defects(a);
  rep.jacobi = rep.jacobi_defects.empty();
  rep.leibniz = is_leibniz(a).holds;
  rep.jordan = rep.commutative ? is_jordan(a) : false;
  rep.series = series(a);
  rep.center = leibniz_center(a);
  rep.metabelian = is_metabelian(a);
  return rep;
}

}  // namespace jja
