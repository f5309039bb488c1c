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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jja/algebra.hpp"

namespace jja {

/// Structural invariants preserved by any algebra isomorphism.  The rank
/// histogram counts rank(L_a) over all elements a, so it is basis-free;
/// it is filled only when the field is finite and small enough to
/// enumerate.
struct InvariantFingerprint {
  int dim{0};
  std::vector<int> derived_series_dims;
  std::vector<int> lower_central_dims;
  int center_dim{0};
  int nilpotency_step{-1};  // -1 encodes "not nilpotent"
  int solvability_step{-1};
  bool commutative{false};
  bool jacobi{false};
  bool has_rank_histogram{false};
  std::map<int, std::uint64_t> left_rank_histogram;

  bool operator==(const InvariantFingerprint& o) const = default;

  /// Name of the first differing component, empty when equal.
  std::string mismatch(const InvariantFingerprint& o) const {
    if (dim != o.dim) return "dim";
    if (derived_series_dims != o.derived_series_dims) return "derived_series_dims";
    if (lower_central_dims != o.lower_central_dims) return "lower_central_dims";
    if (center_dim != o.center_dim) return "center_dim";
    if (nilpotency_step != o.nilpotency_step) return "nilpotency_step";
    if (solvability_step != o.solvability_step) return "solvability_step";
    if (commutative != o.commutative) return "commutative";
    if (jacobi != o.jacobi) return "jacobi";
    if (has_rank_histogram && o.has_rank_histogram && left_rank_histogram != o.left_rank_histogram)
      return "left_rank_histogram";
    return "";
  }
};

namespace detail {

template <class S>
std::vector<Vec<S>> all_vectors(const FieldSpec& f, int n) {
  static_assert(scalar_traits<S>::prime_field);
  const std::uint64_t p = f.modulus;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  std::vector<Vec<S>> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec<S> v(n);
    std::uint64_t t = idx;
    for (int i = 0; i < n; ++i) {
      v(i) = Fp(static_cast<long long>(t % p), static_cast<std::uint32_t>(p));
      t /= p;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

template <class S>
InvariantFingerprint fingerprint(const Algebra<S>& a, std::uint64_t enumeration_cap = 4096) {
  InvariantFingerprint fp;
  fp.dim = a.dim();
  auto s = series(a);
  fp.derived_series_dims = s.derived_series_dims;
  fp.lower_central_dims = s.lower_central_dims;
  fp.nilpotency_step = s.nilpotency_step.value_or(-1);
  fp.solvability_step = s.solvability_step.value_or(-1);
  fp.center_dim = leibniz_center(a).dim();
  fp.commutative = is_commutative(a);
  fp.jacobi = fp.commutative && jacobi_defects(a).empty();
  if constexpr (scalar_traits<S>::prime_field) {
    double bits = a.dim() * std::log2(double(a.field().modulus));
    if (bits <= std::log2(double(enumeration_cap))) {
      fp.has_rank_histogram = true;
      for (const auto& v : detail::all_vectors<S>(a.field(), a.dim()))
        fp.left_rank_histogram[rank<S>(a.left_mult_matrix(v))]++;
    }
  }
  return fp;
}

enum class IsoKind { Yes, NoInvariant, NoExhausted, Unknown };

template <class S>
struct IsoVerdict {
  IsoKind kind{IsoKind::Unknown};
  std::optional<Mat<S>> iso;    // columns are images of basis vectors
  std::string invariant;        // differing fingerprint component
  std::uint64_t nodes{0};
};

namespace detail {

/// Backtracking over images of basis vectors: candidates are filtered by
/// the left-multiplication rank of the preimage, partial maps must stay
/// injective, and every product with support inside the assigned span is
/// checked immediately.  When a product pins a later basis vector its
/// image is forced instead of enumerated.
template <class S>
class IsoSearch {
 public:
  IsoSearch(const Algebra<S>& a, const Algebra<S>& b, std::uint64_t node_cap)
      : a_(a), b_(b), cap_(node_cap), n_(a.dim()) {
    for (int i = 0; i < n_; ++i) rank_a_.push_back(rank<S>(a_.left_mult_matrix(i)));
    pool_ = all_vectors<S>(b_.field(), n_);
    for (const auto& v : pool_) pool_rank_.push_back(rank<S>(b_.left_mult_matrix(v)));
    images_.assign(n_, Vec<S>());
  }

  /// Runs the search; returns true when a full isomorphism was found.
  /// collect_all switches to exhaustive enumeration of automorphisms.
  bool run(bool collect_all, std::vector<Mat<S>>* sink) {
    found_ = false;
    collect_ = collect_all;
    sink_ = sink;
    extend(0);
    return found_;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool capped() const { return nodes_ > cap_; }
  Mat<S> result() const {
    Mat<S> t(n_, n_);
    for (int i = 0; i < n_; ++i) t.col(i) = images_[i];
    return t;
  }

 private:
  bool viable(int level, const Vec<S>& candidate) {
    images_[level] = candidate;
    // partial injectivity
    Mat<S> stacked(level + 1, n_);
    for (int i = 0; i <= level; ++i) stacked.row(i) = images_[i].transpose();
    if (rank<S>(stacked) != level + 1) return false;
    // products fully inside the assigned range must be respected
    for (int j = 0; j <= level; ++j)
      for (int l = j; l <= level; ++l) {
        Vec<S> g = a_.product(j, l);
        bool ready = true;
        for (int k = level + 1; k < n_; ++k)
          if (!(g(k) == S(0))) ready = false;
        if (!ready) continue;
        Vec<S> expect = Vec<S>::Zero(n_);
        for (int k = 0; k <= level; ++k)
          if (!(g(k) == S(0))) expect += g(k) * images_[k];
        if (!exactly_equal<S>(b_.multiply(images_[j], images_[l]), expect)) return false;
      }
    return true;
  }

  /// A later basis vector already pinned by a product of assigned ones.
  std::optional<Vec<S>> forced_candidate(int level) {
    for (int j = 0; j < level; ++j)
      for (int l = j; l < level; ++l) {
        Vec<S> g = a_.product(j, l);
        if (g(level) == S(0)) continue;
        bool rest_assigned = true;
        for (int k = level + 1; k < n_; ++k)
          if (!(g(k) == S(0))) rest_assigned = false;
        if (!rest_assigned) continue;
        Vec<S> rhs = b_.multiply(images_[j], images_[l]);
        for (int k = 0; k < level; ++k)
          if (!(g(k) == S(0))) rhs -= g(k) * images_[k];
        return Vec<S>((S(1) / g(level)) * rhs);
      }
    return std::nullopt;
  }

  void extend(int level) {
    if (found_ && !collect_) return;
    if (nodes_ > cap_) return;
    if (level == n_) {
      found_ = true;
      if (collect_ && sink_) sink_->push_back(result());
      return;
    }
    if (auto forced = forced_candidate(level)) {
      ++nodes_;
      if (viable(level, *forced)) extend(level + 1);
      return;
    }
    for (std::size_t c = 0; c < pool_.size(); ++c) {
      if (found_ && !collect_) return;
      if (nodes_ > cap_) return;
      if (pool_rank_[c] != rank_a_[level]) continue;
      ++nodes_;
      if (viable(level, pool_[c])) extend(level + 1);
    }
  }

  const Algebra<S>& a_;
  const Algebra<S>& b_;
  std::uint64_t cap_;
  int n_;
  std::vector<int> rank_a_;
  std::vector<Vec<S>> pool_;
  std::vector<int> pool_rank_;
  std::vector<Vec<S>> images_;
  std::uint64_t nodes_{0};
  bool found_{false};
  bool collect_{false};
  std::vector<Mat<S>>* sink_{nullptr};
};

}  // namespace detail

/// Isomorphism decision.  Fingerprints give sound refutations over any
/// field; the positive side is exhaustive backtracking over F_p within a
/// node cap.  Over the rationals matching fingerprints yield `unknown`.
template <class S>
IsoVerdict<S> isomorphic(const Algebra<S>& a, const Algebra<S>& b,
                         std::uint64_t node_cap = 10000000) {
  if (a.field() != b.field()) throw FieldMismatch("isomorphic: different fields");
  IsoVerdict<S> out;
  auto fa = fingerprint(a), fb = fingerprint(b);
  std::string diff = fa.mismatch(fb);
  if (!diff.empty()) {
    out.kind = IsoKind::NoInvariant;
    out.invariant = diff;
    return out;
  }
  if constexpr (scalar_traits<S>::prime_field) {
    detail::IsoSearch<S> search(a, b, node_cap);
    bool found = search.run(false, nullptr);
    out.nodes = search.nodes();
    if (found) {
      out.kind = IsoKind::Yes;
      out.iso = search.result();
    } else {
      out.kind = search.capped() ? IsoKind::Unknown : IsoKind::NoExhausted;
    }
    return out;
  } else {
    return out;  // unknown
  }
}

template <class S>
struct AutomorphismGroup {
  std::uint64_t order{0};
  std::vector<Mat<S>> elements;
};

/// Complete enumeration of Aut(A) over F_p by the same backtracking.
template <class S>
AutomorphismGroup<S> automorphisms(const Algebra<S>& a, std::uint64_t node_cap = 10000000) {
  if constexpr (!scalar_traits<S>::prime_field) {
    throw NotEnumerable("automorphism enumeration needs a finite field");
  } else {
    detail::IsoSearch<S> search(a, a, node_cap);
    AutomorphismGroup<S> out;
    search.run(true, &out.elements);
    if (search.capped()) throw CapExceeded("automorphism search exceeded the node cap");
    out.order = out.elements.size();
    return out;
  }
}

enum class HomothetyKind { Yes, No, Unknown };

template <class S>
struct HomothetyVerdict {
  HomothetyKind kind{HomothetyKind::Unknown};
  std::optional<S> s0;
  std::optional<Mat<S>> psi;
};

/// s0 theta(a, b) = theta'(psi(a), psi(b)), i.e. s0 Theta = psi^T Theta'
/// psi.  Rank is checked first as a homothety invariant; over F_p the
/// pair (s0, psi) is searched exhaustively within the cap.
template <class S>
HomothetyVerdict<S> homothetic(const Mat<S>& theta, const Mat<S>& theta_p, const FieldSpec& field,
                               std::uint64_t cap = 2000000) {
  if (theta.rows() != theta_p.rows() || theta.cols() != theta_p.cols())
    throw DimensionMismatch("forms of different sizes");
  HomothetyVerdict<S> out;
  if (rank<S>(theta) != rank<S>(theta_p)) {
    out.kind = HomothetyKind::No;
    return out;
  }
  const int n = static_cast<int>(theta.rows());
  if constexpr (scalar_traits<S>::prime_field) {
    const std::uint64_t p = field.modulus;
    double bits = n * n * std::log2(double(p));
    if (bits > std::log2(double(cap))) return out;  // unknown
    std::uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Mat<S> psi(n, n);
      std::uint64_t t = idx;
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
          psi(r, c) = Fp(static_cast<long long>(t % p), static_cast<std::uint32_t>(p));
          t /= p;
        }
      if (rank<S>(psi) != n) continue;
      Mat<S> sandwich = psi.transpose() * theta_p * psi;
      for (std::uint64_t s = 1; s < p; ++s) {
        S s0 = Fp(static_cast<long long>(s), static_cast<std::uint32_t>(p));
        if (exactly_equal<S>(Mat<S>(s0 * theta), sandwich)) {
          out.kind = HomothetyKind::Yes;
          out.s0 = s0;
          out.psi = psi;
          return out;
        }
      }
    }
    out.kind = HomothetyKind::No;
    return out;
  } else {
    return out;  // unknown without a negative rank certificate
  }
}

template <class S>
struct HomothetyCensus {
  std::uint64_t class_count{0};
  std::vector<Mat<S>> representatives;
};

/// Brute-force orbit census of all symmetric n x n forms over F_p under
/// (s0, psi); the oracle behind the frozen regression values.
template <class S>
HomothetyCensus<S> sym_homothety_census(int n, const FieldSpec& field) {
  static_assert(scalar_traits<S>::prime_field);
  const std::uint64_t p = field.modulus;
  auto encode = [&](const Mat<S>& m) {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) key = key * p + static_cast<std::uint64_t>(m(i, j).v);
    return key;
  };
  // all symmetric forms, indexed by the upper triangle
  const int slots = n * (n + 1) / 2;
  std::uint64_t total = 1;
  for (int i = 0; i < slots; ++i) total *= p;
  std::vector<Mat<S>> forms;
  forms.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Mat<S> m(n, n);
    std::uint64_t t = idx;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        S v = Fp(static_cast<long long>(t % p), static_cast<std::uint32_t>(p));
        t /= p;
        m(i, j) = v;
        m(j, i) = v;
      }
    forms.push_back(std::move(m));
  }
  std::vector<Mat<S>> gl;
  for (const auto& cols : detail::all_vectors<S>(field, n * n)) {
    Mat<S> psi(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) psi(r, c) = cols(c * n + r);
    if (rank<S>(psi) == n) gl.push_back(std::move(psi));
  }
  std::vector<bool> visited(total, false);
  HomothetyCensus<S> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (visited[idx]) continue;
    ++out.class_count;
    out.representatives.push_back(forms[idx]);
    // orbit closure
    std::vector<std::uint64_t> frontier{idx};
    visited[idx] = true;
    while (!frontier.empty()) {
      auto cur = frontier.back();
      frontier.pop_back();
      for (const auto& psi : gl) {
        Mat<S> sandwich = psi.transpose() * forms[cur] * psi;
        for (std::uint64_t s = 1; s < p; ++s) {
          S s0 = Fp(static_cast<long long>(s), static_cast<std::uint32_t>(p));
          auto key = encode(Mat<S>((S(1) / s0) * sandwich));
          if (!visited[key]) {
            visited[key] = true;
            frontier.push_back(key);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace jja
