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

#include "jja/algebra.hpp"

namespace jja {

/// The space of invariant bilinear forms of an algebra, i.e. all B with
/// B(a b, c) = B(a, b c), together with the common radical
/// { v : B(v, -) = 0 for every such B }.
template <class S>
struct FormSpace {
  Algebra<S> algebra;
  std::vector<Mat<S>> basis_forms;
  Subspace<S> common_radical;
};

/// Exact kernel of the invariance system in the n^2 coordinates of B.
template <class S>
FormSpace<S> invariant_form_space(const Algebra<S>& a) {
  const int n = a.dim();
  Mat<S> sys(n * n * n, n * n);
  sys.setZero();
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<S> ij = a.product(i, j);
      for (int l = 0; l < n; ++l) {
        Vec<S> jl = a.product(j, l);
        // B(e_i e_j, e_l) - B(e_i, e_j e_l) = 0
        for (int k = 0; k < n; ++k) {
          sys(row, k * n + l) += ij(k);
          sys(row, i * n + k) -= jl(k);
        }
        ++row;
      }
    }
  Mat<S> coeffs = kernel_basis<S>(sys);
  FormSpace<S> out{a, {}, {}};
  for (Eigen::Index c = 0; c < coeffs.cols(); ++c) {
    Mat<S> b(n, n);
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) b(r, k) = coeffs(r * n + k, c);
    out.basis_forms.push_back(std::move(b));
  }
  // v is radical iff B^T v = 0 for every basis form
  Mat<S> stacked(static_cast<Eigen::Index>(out.basis_forms.size()) * n, n);
  for (std::size_t f = 0; f < out.basis_forms.size(); ++f)
    stacked.middleRows(static_cast<Eigen::Index>(f) * n, n) = out.basis_forms[f].transpose();
  out.common_radical = out.basis_forms.empty() ? Subspace<S>::full(n) : kernel_subspace<S>(stacked);
  return out;
}

enum class FrobeniusKind { Frobenius, NotFrobenius, Undetermined };

template <class S>
struct FrobeniusVerdict {
  FrobeniusKind kind{FrobeniusKind::Undetermined};
  std::optional<Mat<S>> certificate;      // nondegenerate invariant form
  std::optional<Vec<S>> radical_witness;  // kills every invariant form
};

/// Decide Frobenius status.  A nonzero common radical disproves it exactly
/// (every invariant form is degenerate on the witness).  The positive side
/// is a certificate search: exhaustive over F_p when the form space is
/// small enough, seeded random combinations otherwise; failure to find a
/// certificate is reported as Undetermined, never as a disproof.
template <class S>
FrobeniusVerdict<S> is_frobenius(const Algebra<S>& a, int trials = 200,
                                 std::uint64_t seed = 1,
                                 std::uint64_t exhaustive_cap = 100000) {
  auto space = invariant_form_space(a);
  FrobeniusVerdict<S> out;
  if (space.common_radical.dim() > 0) {
    out.kind = FrobeniusKind::NotFrobenius;
    out.radical_witness = space.common_radical.basis_vector(0);
    return out;
  }
  const int d = static_cast<int>(space.basis_forms.size());
  const int n = a.dim();
  if (n == 0) {  // the zero algebra is vacuously self-dual
    out.kind = FrobeniusKind::Frobenius;
    out.certificate = Mat<S>(0, 0);
    return out;
  }
  auto combine = [&](const std::vector<S>& c) {
    Mat<S> b = Mat<S>::Zero(n, n);
    for (int i = 0; i < d; ++i)
      if (!(c[i] == S(0))) b += c[i] * space.basis_forms[i];
    return b;
  };
  if constexpr (scalar_traits<S>::prime_field) {
    const std::uint64_t p = a.field().modulus;
    double log_total = d * std::log2(double(p));
    if (log_total <= std::log2(double(exhaustive_cap))) {
      std::vector<S> c(d, S(0));
      std::uint64_t total = 1;
      for (int i = 0; i < d; ++i) total *= p;
      for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (int i = 0; i < d; ++i) {
          c[i] = Fp(static_cast<long long>(t % p), static_cast<std::uint32_t>(p));
          t /= p;
        }
        Mat<S> b = combine(c);
        if (!(determinant<S>(b) == S(0))) {
          out.kind = FrobeniusKind::Frobenius;
          out.certificate = std::move(b);
          return out;
        }
      }
      return out;  // exhausted: Undetermined
    }
  }
  SeededRng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<S> c(d);
    for (int i = 0; i < d; ++i) c[i] = rng.scalar<S>(a.field());
    Mat<S> b = combine(c);
    if (!(determinant<S>(b) == S(0))) {
      out.kind = FrobeniusKind::Frobenius;
      out.certificate = std::move(b);
      return out;
    }
  }
  return out;
}

/// Exact invariance residual check for a candidate form; used by tests and
/// by the CLI to re-verify certificates.
template <class S>
bool is_invariant_form(const Algebra<S>& a, const Mat<S>& b) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        S lhs = S(0), rhs = S(0);
        Vec<S> ij = a.product(i, j), jl = a.product(j, l);
        for (int k = 0; k < n; ++k) {
          lhs += ij(k) * b(k, l);
          rhs += jl(k) * b(i, k);
        }
        if (!(lhs == rhs)) return false;
      }
  return true;
}

}  // namespace jja
