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

/// The operator R(a (x) b) = alpha b (x) a + c (x) (a b) for a central c,
/// as an n^2 x n^2 matrix in the lexicographic tensor basis
/// (i, j) -> i n + j.
template <class S>
struct YBContext {
  Algebra<S> algebra;
  S alpha;
  Vec<S> central;
  Mat<S> r;
};

template <class S>
YBContext<S> build_R(const Algebra<S>& a, const S& alpha, const Vec<S>& central) {
  const int n = a.dim();
  if (central.size() != n) throw DimensionMismatch("central element length");
  if (alpha == S(0)) throw ZeroAlpha("alpha must be a unit");
  if (is_zero<S>(central)) throw ZeroCentral("central element must be nonzero");
  if (!leibniz_center(a).contains(central)) throw NotCentral("vector outside the Leibniz center");
  Mat<S> r = Mat<S>::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int col = i * n + j;
      r(j * n + i, col) += alpha;
      Vec<S> prod = a.product(i, j);
      for (int k = 0; k < n; ++k) {
        if (central(k) == S(0)) continue;
        for (int l = 0; l < n; ++l)
          if (!(prod(l) == S(0))) r(k * n + l, col) += central(k) * prod(l);
      }
    }
  return {a, alpha, central, std::move(r)};
}

template <class S>
struct QybeResult {
  bool holds{false};
  int residual_rank{0};
};

/// R12 R23 R12 = R23 R12 R23 on the tensor cube, verified exactly; the
/// residual is either exactly zero or exactly nonzero.
template <class S>
QybeResult<S> check_qybe(const YBContext<S>& ctx) {
  const int n = ctx.algebra.dim();
  Mat<S> id = Mat<S>::Identity(n, n);
  Mat<S> r12 = kron<S>(ctx.r, id);
  Mat<S> r23 = kron<S>(id, ctx.r);
  Mat<S> lhs = r12 * r23 * r12;
  Mat<S> rhs = r23 * r12 * r23;
  Mat<S> residual = lhs - rhs;
  QybeResult<S> out;
  out.holds = is_zero<S>(residual);
  out.residual_rank = out.holds ? 0 : rank<S>(residual);
  return out;
}

template <class S>
struct QybeSweepReport {
  bool vacuous{false};        // empty center: nothing to test
  bool consistent{true};      // check_qybe == is_leibniz on every draw
  bool jj_step_consistent{true};  // for JJ inputs: == (char 2 or step <= 3)
  int checked{0};
  std::vector<std::pair<S, Vec<S>>> counterexamples;
};

/// Sweep of the equivalence "R_{alpha, c} solves QYBE iff the algebra is
/// Leibniz": exhaustive over F_p when the center is small, seeded samples
/// otherwise.  For JJ inputs the nilpotency-step form of the criterion is
/// verified too.
template <class S>
QybeSweepReport<S> qybe_leibniz_equivalence(const Algebra<S>& a, int samples = 20,
                                            std::uint64_t seed = 1,
                                            std::uint64_t exhaustive_cap = 4096) {
  QybeSweepReport<S> out;
  auto center = leibniz_center(a);
  if (center.dim() == 0) {
    out.vacuous = true;
    return out;
  }
  const bool leibniz = is_leibniz(a).holds;
  bool jj = is_jacobi_jordan(a);
  bool step_small = false;
  if (jj) {
    auto s = series(a);
    step_small = s.nilpotency_step.has_value() && *s.nilpotency_step <= 3;
  }
  auto run_one = [&](const S& alpha, const Vec<S>& c) {
    auto got = check_qybe(build_R(a, alpha, c)).holds;
    ++out.checked;
    if (got != leibniz) {
      out.consistent = false;
      out.counterexamples.push_back({alpha, c});
    }
    if (jj) {
      bool predicted = (a.field().characteristic() == 2) || step_small;
      if (got != predicted) out.jj_step_consistent = false;
    }
  };
  if constexpr (scalar_traits<S>::prime_field) {
    const std::uint64_t p = a.field().modulus;
    std::uint64_t combos = 1;
    for (int i = 0; i < center.dim(); ++i) combos *= p;
    if (combos * (p - 1) <= exhaustive_cap) {
      for (std::uint64_t av = 1; av < p; ++av) {
        S alpha = Fp(static_cast<long long>(av), static_cast<std::uint32_t>(p));
        for (std::uint64_t idx = 1; idx < combos; ++idx) {
          Vec<S> c = Vec<S>::Zero(a.dim());
          std::uint64_t t = idx;
          for (int i = 0; i < center.dim(); ++i) {
            c += Fp(static_cast<long long>(t % p), static_cast<std::uint32_t>(p)) *
                 center.basis_vector(i);
            t /= p;
          }
          run_one(alpha, c);
        }
      }
      return out;
    }
  }
  SeededRng rng(seed);
  for (int t = 0; t < samples; ++t) {
    S alpha = rng.scalar<S>(a.field());
    if (alpha == S(0)) alpha = S(1);
    Vec<S> c = Vec<S>::Zero(a.dim());
    for (int i = 0; i < center.dim(); ++i) c += rng.scalar<S>(a.field()) * center.basis_vector(i);
    if (is_zero<S>(c)) c = center.basis_vector(0);
    run_one(alpha, c);
  }
  return out;
}

}  // namespace jja
