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
#include <vector>

#include <Eigen/Dense>

#include "jja/errors.hpp"
#include "jja/field.hpp"

namespace jja {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
bool is_zero(const Mat<S>& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!(m(r, c) == S(0))) return false;
  return true;
}

template <class S>
bool is_zero(const Vec<S>& v) {
  for (Eigen::Index r = 0; r < v.size(); ++r)
    if (!(v(r) == S(0))) return false;
  return true;
}

template <class S>
bool exactly_equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero<S>(Mat<S>(a - b));
}

template <class S>
bool exactly_equal(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) return false;
  return is_zero<S>(Vec<S>(a - b));
}

template <class S>
struct RrefResult {
  Mat<S> rref;
  std::vector<int> pivots;  // pivot column per pivot row
  int rank{0};
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.  Pivots are
/// the first nonzero entry in each column scan; no magnitude comparisons
/// are ever made, so the result is canonical for the row space.
template <class S>
RrefResult<S> rref(Mat<S> m) {
  RrefResult<S> out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!(m(i, c) == S(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    S inv = S(1) / m(r, c);
    m.row(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      if (!(m(i, c) == S(0))) {
        S factor = m(i, c);
        m.row(i) -= factor * m.row(r);
      }
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  out.rank = static_cast<int>(r);
  out.rref = std::move(m);
  return out;
}

template <class S>
int rank(const Mat<S>& m) {
  return rref<S>(m).rank;
}

/// Basis of {x : Mx = 0}, one column per free variable, in free-column order.
template <class S>
Mat<S> kernel_basis(const Mat<S>& m) {
  auto rr = rref<S>(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  Eigen::Index nfree = cols - rr.rank;
  Mat<S> out = Mat<S>::Zero(cols, nfree);
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    out(c, k) = S(1);
    for (int pr = 0; pr < rr.rank; ++pr) out(rr.pivots[pr], k) = -rr.rref(pr, c);
    ++k;
  }
  return out;
}

template <class S>
struct SolveResult {
  bool consistent{false};
  Vec<S> particular;  // valid iff consistent
};

/// One exact solution of Mx = b, or the inconsistency flag.
template <class S>
SolveResult<S> solve(const Mat<S>& m, const Vec<S>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length");
  Mat<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  auto rr = rref<S>(aug);
  SolveResult<S> out;
  for (int i = 0; i < rr.rank; ++i)
    if (rr.pivots[i] == static_cast<int>(m.cols())) return out;  // 0 = 1 row
  out.consistent = true;
  out.particular = Vec<S>::Zero(m.cols());
  for (int i = 0; i < rr.rank; ++i) out.particular(rr.pivots[i]) = rr.rref(i, m.cols());
  return out;
}

template <class S>
S determinant(Mat<S> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  S det = S(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!(m(i, c) == S(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) return S(0);
    if (pivot != c) {
      m.row(pivot).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    S inv = S(1) / m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (!(m(i, c) == S(0))) {
        S factor = m(i, c) * inv;
        m.row(i) -= factor * m.row(c);
      }
    }
  }
  return det;
}

/// Exact inverse; requires a square nonsingular input.
template <class S>
Mat<S> inverse(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const Eigen::Index n = m.rows();
  Mat<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Mat<S>::Identity(n, n);
  auto rr = rref<S>(aug);
  if (rr.rank < n || rr.pivots[n - 1] >= static_cast<int>(n))
    throw Error("inverse of singular matrix");
  return rr.rref.rightCols(n);
}

/// Kronecker (tensor) product in the usual block layout:
/// (A (x) B)((i*rb + k), (j*cb + l)) = A(i, j) * B(k, l).
template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// A linear subspace of k^n held in canonical form: the rows of basis()
/// are the RREF of any generating set, so equal subspaces compare equal
/// entrywise.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat<S>(0, ambient);
    return s;
  }
  static Subspace full(int ambient) { return span_of_rows(Mat<S>::Identity(ambient, ambient)); }
  /// Canonicalizes a generating set given as matrix rows.
  static Subspace span_of_rows(const Mat<S>& rows) {
    Subspace s;
    s.ambient_ = static_cast<int>(rows.cols());
    auto rr = rref<S>(rows);
    s.basis_ = rr.rref.topRows(rr.rank);
    return s;
  }
  static Subspace span_of_cols(const Mat<S>& cols) { return span_of_rows(Mat<S>(cols.transpose())); }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const Mat<S>& basis() const { return basis_; }
  Vec<S> basis_vector(int i) const { return basis_.row(i).transpose(); }

  bool contains(const Vec<S>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::contains");
    Mat<S> stacked(dim() + 1, ambient_);
    stacked.topRows(dim()) = basis_;
    stacked.row(dim()) = v.transpose();
    return rank<S>(stacked) == dim();
  }
  bool contains(const Subspace& w) const {
    if (w.ambient_ != ambient_) throw DimensionMismatch("Subspace::contains");
    Mat<S> stacked(dim() + w.dim(), ambient_);
    stacked.topRows(dim()) = basis_;
    stacked.bottomRows(w.dim()) = w.basis_;
    return rank<S>(stacked) == dim();
  }

  friend Subspace sum(const Subspace& u, const Subspace& w) {
    if (u.ambient_ != w.ambient_) throw DimensionMismatch("Subspace sum");
    Mat<S> stacked(u.dim() + w.dim(), u.ambient_);
    stacked.topRows(u.dim()) = u.basis_;
    stacked.bottomRows(w.dim()) = w.basis_;
    return span_of_rows(stacked);
  }

  /// U cap W via the kernel of [U^T | W^T]: a kernel vector (x, y) has
  /// U^T x = -W^T y, and those common values span the intersection.
  friend Subspace intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient_ != w.ambient_) throw DimensionMismatch("Subspace intersect");
    if (u.dim() == 0 || w.dim() == 0) return zero(u.ambient_);
    Mat<S> joint(u.ambient_, u.dim() + w.dim());
    joint.leftCols(u.dim()) = u.basis_.transpose();
    joint.rightCols(w.dim()) = w.basis_.transpose();
    Mat<S> ker = kernel_basis<S>(joint);
    Mat<S> gens(ker.cols(), u.ambient_);
    for (Eigen::Index k = 0; k < ker.cols(); ++k)
      gens.row(k) = (u.basis_.transpose() * ker.col(k).head(u.dim())).transpose();
    return span_of_rows(gens);
  }

  /// dim(U/W); requires W <= U.
  int quotient_dim(const Subspace& w) const {
    if (w.ambient_ != ambient_) throw DimensionMismatch("quotient_dim");
    if (!contains(w)) throw NotContained("quotient_dim: subspace not contained");
    return dim() - w.dim();
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && dim() == o.dim() && exactly_equal<S>(basis_, o.basis_);
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_{0};
  Mat<S> basis_;
};

/// Kernel of M as a canonical subspace of the column-coordinate space.
template <class S>
Subspace<S> kernel_subspace(const Mat<S>& m) {
  return Subspace<S>::span_of_cols(kernel_basis<S>(m));
}

}  // namespace jja
