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

#include <string>
#include <vector>

#include "jja/algebra.hpp"

// Constructors for the named algebra families.  Each emits a fixed,
// documented basis order so printed files are byte-stable:
//   abelian(n)             e1 .. en            (all products zero)
//   heisenberg(n)          e1..en f1..fn z     e_i f_i = z
//   a12()                  e1 e2               e1 e1 = e2
//   a_xyz(n, X, Y, Z)      e1..en f1..fn y z   e_i e_j = X_ij y,
//                          f_i f_j = Y_ij y, e_i f_j = d_ij z + Z_ij y
//   heis_abc(n, A, B, C)   e1..en f1..fn z y   same products with y last
//   v_f_v0(f, v0)          f e1..em            f f = v0, f e_i = f(e_i)
//   kn_x_v0(X, v0)         f e1..en            same as v_f_v0
//   a_theta(theta)         e1..en f            e_i e_j = theta_ij f
//   j_t(n, t)              f e1..en            e_1^2 = ... = e_t^2 = f

namespace jja::families {

template <class S>
Algebra<S> abelian(int n, const FieldSpec& field) {
  if (n < 0) throw BadParameters("abelian: dimension must be nonnegative");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return Algebra<S>(field, n, names);
}

template <class S>
Algebra<S> heisenberg(int n, const FieldSpec& field) {
  if (n < 1) throw BadParameters("heisenberg: n must be positive");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("f" + std::to_string(i));
  names.push_back("z");
  Algebra<S> a(field, 2 * n + 1, names);
  Vec<S> z = a.basis_vector(2 * n);
  for (int i = 0; i < n; ++i) a.set_product_symmetric(i, n + i, z);
  return a;
}

template <class S>
Algebra<S> a12(const FieldSpec& field) {
  Algebra<S> a(field, 2, {"e1", "e2"});
  a.set_product(0, 0, a.basis_vector(1));
  return a;
}

namespace detail {
template <class S>
void require_symmetric(const Mat<S>& m, const std::string& name) {
  if (m.rows() != m.cols()) throw BadParameters(name + " must be square");
  if (!exactly_equal<S>(m, Mat<S>(m.transpose()))) throw BadParameters(name + " must be symmetric");
}
}  // namespace detail

template <class S>
Algebra<S> a_xyz(int n, const Mat<S>& x, const Mat<S>& y, const Mat<S>& z, const FieldSpec& field) {
  detail::require_symmetric<S>(x, "X");
  detail::require_symmetric<S>(y, "Y");
  detail::require_symmetric<S>(z, "Z");
  if (x.rows() != n || y.rows() != n || z.rows() != n) throw BadParameters("a_xyz: matrices must be n x n");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("f" + std::to_string(i));
  names.push_back("y");
  names.push_back("z");
  Algebra<S> a(field, 2 * n + 2, names);
  Vec<S> yv = a.basis_vector(2 * n), zv = a.basis_vector(2 * n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.set_product(i, j, Vec<S>(x(i, j) * yv));
      a.set_product(n + i, n + j, Vec<S>(y(i, j) * yv));
      Vec<S> ef = z(i, j) * yv;
      if (i == j) ef += zv;
      a.set_product(i, n + j, ef);
      a.set_product(n + j, i, ef);
    }
  return a;
}

template <class S>
Algebra<S> heis_abc(int n, const Mat<S>& ma, const Mat<S>& mb, const Mat<S>& mc, const FieldSpec& field) {
  detail::require_symmetric<S>(ma, "A");
  detail::require_symmetric<S>(mb, "B");
  detail::require_symmetric<S>(mc, "C");
  if (ma.rows() != n || mb.rows() != n || mc.rows() != n)
    throw BadParameters("heis_abc: matrices must be n x n");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("f" + std::to_string(i));
  names.push_back("z");
  names.push_back("y");
  Algebra<S> a(field, 2 * n + 2, names);
  Vec<S> zv = a.basis_vector(2 * n), yv = a.basis_vector(2 * n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.set_product(i, j, Vec<S>(ma(i, j) * yv));
      a.set_product(n + i, n + j, Vec<S>(mb(i, j) * yv));
      Vec<S> ef = mc(i, j) * yv;
      if (i == j) ef += zv;
      a.set_product(i, n + j, ef);
      a.set_product(n + j, i, ef);
    }
  return a;
}

template <class S>
Algebra<S> v_f_v0(const Mat<S>& f, const Vec<S>& v0, const FieldSpec& field) {
  const int m = static_cast<int>(f.rows());
  if (f.cols() != m) throw BadParameters("v_f_v0: f must be square");
  if (v0.size() != m) throw BadParameters("v_f_v0: v0 length mismatch");
  if (!is_zero<S>(Mat<S>(f * f))) throw BadParameters("v_f_v0: f^2 must vanish");
  if (!is_zero<S>(Vec<S>(f * v0))) throw BadParameters("v_f_v0: v0 must lie in Ker f");
  std::vector<std::string> names{"f"};
  for (int i = 1; i <= m; ++i) names.push_back("e" + std::to_string(i));
  Algebra<S> a(field, m + 1, names);
  Vec<S> ff = Vec<S>::Zero(m + 1);
  ff.tail(m) = v0;
  a.set_product(0, 0, ff);
  for (int i = 0; i < m; ++i) {
    Vec<S> fe = Vec<S>::Zero(m + 1);
    fe.tail(m) = f.col(i);
    a.set_product_symmetric(0, 1 + i, fe);
  }
  return a;
}

template <class S>
Algebra<S> kn_x_v0(const Mat<S>& x, const Vec<S>& v0, const FieldSpec& field) {
  return v_f_v0<S>(x, v0, field);
}

template <class S>
Algebra<S> a_theta(const Mat<S>& theta, const FieldSpec& field) {
  detail::require_symmetric<S>(theta, "theta");
  const int n = static_cast<int>(theta.rows());
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  names.push_back("f");
  Algebra<S> a(field, n + 1, names);
  Vec<S> fv = a.basis_vector(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.set_product(i, j, Vec<S>(theta(i, j) * fv));
  return a;
}

template <class S>
Algebra<S> j_t(int n, int t, const FieldSpec& field) {
  if (t < 1 || t > n) throw BadParameters("j_t: need 1 <= t <= n");
  std::vector<std::string> names{"f"};
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  Algebra<S> a(field, n + 1, names);
  Vec<S> fv = a.basis_vector(0);
  for (int i = 1; i <= t; ++i) a.set_product(i, i, fv);
  return a;
}

/// Nonunital k[x]/(x^4) on basis {x, x^2, x^3}: commutative but not
/// Jacobi, the stock counterexample for axiom and Yang-Baxter tests.
template <class S>
Algebra<S> truncated_polynomial(const FieldSpec& field) {
  Algebra<S> a(field, 3, {"x", "x2", "x3"});
  a.set_product(0, 0, a.basis_vector(1));
  a.set_product_symmetric(0, 1, a.basis_vector(2));
  return a;
}

}  // namespace jja::families
