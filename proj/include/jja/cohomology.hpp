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

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "jja/crossed.hpp"

namespace jja {

// Symmetric V-valued bilinear maps are coordinatized by upper-triangular
// index pairs: slot (i <= j, fiber t) lives at column tri_index(i,j)*m + t.
inline int tri_count(int n) { return n * (n + 1) / 2; }
inline int tri_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

enum class CocycleContext { Abelian, Coflag, Metabelian };

/// Cocycles, coboundaries and their quotient dimension for one of the
/// three contexts.  Z2 and B2 are canonical subspaces of the
/// tri_count(n) * m coordinate space; B2 <= Z2 is asserted on
/// construction.
template <class S>
struct CocycleSpace {
  CocycleContext context{CocycleContext::Abelian};
  int base_dim{0};
  int fiber_dim{0};
  Subspace<S> z2;
  Subspace<S> b2;
  int h2_dim{0};

  /// Unpack a coordinate vector of this space into a BilinearVMap.
  BilinearVMap<S> unpack(const Vec<S>& coords) const {
    BilinearVMap<S> theta(base_dim, fiber_dim);
    for (int i = 0; i < base_dim; ++i)
      for (int j = i; j < base_dim; ++j) {
        Vec<S> v(fiber_dim);
        for (int t = 0; t < fiber_dim; ++t) v(t) = coords(tri_index(base_dim, i, j) * fiber_dim + t);
        theta.set_symmetric(i, j, v);
      }
    return theta;
  }
  Vec<S> pack(const BilinearVMap<S>& theta) const {
    Vec<S> coords(tri_count(base_dim) * fiber_dim);
    for (int i = 0; i < base_dim; ++i)
      for (int j = i; j < base_dim; ++j)
        for (int t = 0; t < fiber_dim; ++t)
          coords(tri_index(base_dim, i, j) * fiber_dim + t) = theta.value(i, j)(t);
    return coords;
  }
};

namespace detail {

/// Rows of the cyclic-sum operator
///   S(a,b,c) = sum_cyc theta(a, b c) + sum_cyc rho_a theta(b, c)
/// over unordered basis triples; the base is commutative and theta
/// symmetric, so unordered triples carry the full condition.
template <class S>
Mat<S> cyclic_operator(const Algebra<S>& base, const std::vector<Mat<S>>& rho, int m) {
  const int n = base.dim();
  const int t_cols = tri_count(n) * m;
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int l = j; l < n; ++l) triples.push_back({i, j, l});
  Mat<S> op = Mat<S>::Zero(static_cast<Eigen::Index>(triples.size()) * m, t_cols);
  int row0 = 0;
  for (auto [i, j, l] : triples) {
    auto add_theta_term = [&](int x, int y, int z) {
      // theta(e_x, gamma(y,z)) contributes gamma(y,z)_k at slot (x,k)
      Vec<S> g = base.product(y, z);
      for (int k = 0; k < n; ++k)
        if (!(g(k) == S(0)))
          for (int t = 0; t < m; ++t) op(row0 + t, tri_index(n, x, k) * m + t) += g(k);
    };
    auto add_action_term = [&](int x, int y, int z) {
      // rho_x * theta(e_y, e_z)
      for (int t = 0; t < m; ++t)
        for (int s = 0; s < m; ++s)
          if (!(rho[x](t, s) == S(0))) op(row0 + t, tri_index(n, y, z) * m + s) += rho[x](t, s);
    };
    add_theta_term(i, j, l);
    add_theta_term(j, l, i);
    add_theta_term(l, i, j);
    add_action_term(i, j, l);
    add_action_term(j, l, i);
    add_action_term(l, i, j);
    row0 += m;
  }
  return op;
}

/// Columns of the coboundary map r -> (delta r)(a, b) = a |> r(b) +
/// b |> r(a) - r(a b); with an abelian base the last term vanishes by
/// itself.
template <class S>
Mat<S> coboundary_matrix(const Algebra<S>& base, const std::vector<Mat<S>>& rho, int m) {
  const int n = base.dim();
  Mat<S> delta = Mat<S>::Zero(tri_count(n) * m, static_cast<Eigen::Index>(n) * m);
  for (int q = 0; q < n; ++q)
    for (int s = 0; s < m; ++s) {
      const int col = q * m + s;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          const int slot = tri_index(n, i, j) * m;
          if (j == q)
            for (int t = 0; t < m; ++t) delta(slot + t, col) += rho[i](t, s);
          if (i == q)
            for (int t = 0; t < m; ++t) delta(slot + t, col) += rho[j](t, s);
          S g = base.product(i, j)(q);
          if (!(g == S(0))) delta(slot + s, col) -= g;
        }
    }
  return delta;
}

template <class S>
CocycleSpace<S> make_space(CocycleContext ctx, const Algebra<S>& base,
                           const std::vector<Mat<S>>& rho, int m) {
  CocycleSpace<S> out;
  out.context = ctx;
  out.base_dim = base.dim();
  out.fiber_dim = m;
  out.z2 = kernel_subspace<S>(cyclic_operator<S>(base, rho, m));
  out.b2 = Subspace<S>::span_of_cols(coboundary_matrix<S>(base, rho, m));
  if (!out.z2.contains(out.b2)) throw Error("coboundaries escaped the cocycle space");
  out.h2_dim = out.z2.dim() - out.b2.dim();
  return out;
}

}  // namespace detail

/// Z^2 and B^2 for a JJ module over an abelian fiber.
template <class S>
CocycleSpace<S> abelian_cocycles(const Algebra<S>& a, const ActionData<S>& action) {
  if (!is_jj_module(action).holds) throw NotAModule("abelian_cocycles needs a JJ module");
  return detail::make_space<S>(CocycleContext::Abelian, a, action.rho, action.space_dim);
}

/// lambda(a b) = -2 lambda(a) lambda(b) on the probe set of basis vectors
/// and pairwise sums.  The constraint is quadratic in lambda, hence the
/// probe set rather than a bilinearity argument.
template <class S>
bool satisfies_lambda_equation(const Algebra<S>& a, const Vec<S>& lam) {
  const int n = a.dim();
  std::vector<Vec<S>> probes;
  for (int i = 0; i < n; ++i) probes.push_back(a.basis_vector(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) probes.push_back(Vec<S>(a.basis_vector(i) + a.basis_vector(j)));
  auto lam_of = [&](const Vec<S>& v) {
    S acc = S(0);
    for (int k = 0; k < n; ++k) acc += lam(k) * v(k);
    return acc;
  };
  S minus_two = S(0) - S(1) - S(1);
  for (std::size_t x = 0; x < probes.size(); ++x)
    for (std::size_t y = x; y < probes.size(); ++y) {
      S lhs = lam_of(a.multiply(probes[x], probes[y]));
      S rhs = minus_two * lam_of(probes[x]) * lam_of(probes[y]);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

template <class S>
struct LambdaList {
  std::vector<Vec<S>> lambdas;
  bool complete{true};
};

/// All admissible lambda functionals.  Exhaustive over F_p.  Over the
/// rationals a nilpotent algebra forces lambda = 0 exactly: iterating
/// squares a^[k+1] = a^[k] a^[k] lands in the lower central series, so
/// lambda(a)^(2^k) is pinned to zero and lambda(a) = 0 follows; the list
/// {0} is then complete.  Non-nilpotent input over Q is reported
/// incomplete.
template <class S>
LambdaList<S> coflag_lambdas(const Algebra<S>& a) {
  const auto& f = a.field();
  if (f.is_prime_field() && (f.modulus == 2 || f.modulus == 3))
    throw ClassificationCharUnsupported("co-flag classification assumes characteristic != 2, 3");
  const int n = a.dim();
  LambdaList<S> out;
  if constexpr (scalar_traits<S>::prime_field) {
    const std::uint64_t p = f.modulus;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Vec<S> lam(n);
      std::uint64_t t = idx;
      for (int i = 0; i < n; ++i) {
        lam(i) = Fp(static_cast<long long>(t % p), static_cast<std::uint32_t>(p));
        t /= p;
      }
      if (satisfies_lambda_equation(a, lam)) out.lambdas.push_back(std::move(lam));
    }
    return out;
  } else {
    out.lambdas.push_back(Vec<S>(Vec<S>::Zero(n)));
    out.complete = series(a).nilpotency_step.has_value();
    return out;
  }
}

/// Z^2_lambda and its coboundaries (delta t)(a,b) = lambda(a) t(b) +
/// lambda(b) t(a) - t(a b); the action is scalar multiplication by
/// lambda.
template <class S>
CocycleSpace<S> coflag_cohomology(const Algebra<S>& a, const Vec<S>& lam) {
  if (lam.size() != a.dim()) throw DimensionMismatch("lambda length");
  if (!satisfies_lambda_equation(a, lam)) throw InvalidLambda("lambda fails its defining equation");
  std::vector<Mat<S>> rho;
  for (int i = 0; i < a.dim(); ++i) {
    Mat<S> r(1, 1);
    r(0, 0) = lam(i);
    rho.push_back(r);
  }
  return detail::make_space<S>(CocycleContext::Coflag, a, rho, 1);
}

/// Metabelian context: abelian base, anticommuting action operators,
/// cocycle condition sum_cyc a |> theta(b, c) = 0 and coboundaries
/// without the -r(a b) term.
template <class S>
CocycleSpace<S> metabelian_cohomology(int base_dim, int fiber_dim, const std::vector<Mat<S>>& rho,
                                      const FieldSpec& field) {
  if (static_cast<int>(rho.size()) != base_dim) throw DimensionMismatch("one operator per base vector");
  for (int i = 0; i < base_dim; ++i)
    for (int j = i; j < base_dim; ++j)
      if (!is_zero<S>(Mat<S>(rho[i] * rho[j] + rho[j] * rho[i])))
        throw ActionNotAnticommuting("metabelian action must anticommute");
  Algebra<S> base = Algebra<S>(field, base_dim);
  return detail::make_space<S>(CocycleContext::Metabelian, base, rho, fiber_dim);
}

template <class S>
struct GlobalH2Entry {
  std::vector<Mat<S>> rho;
  int h2_dim{0};
};

template <class S>
struct GlobalH2Report {
  std::vector<GlobalH2Entry<S>> actions;
  bool truncated{false};
  std::uint64_t total_classes{0};  // sum over actions of p^h2, complete runs only
  std::vector<Algebra<S>> fiber_structures;  // JJ multiplications on k^m (m <= 2)
  bool fibers_enumerated{false};
};

/// Decomposition of H^2(A, V_0) over all module structures on k^m,
/// enumerated exhaustively over F_p within the cap.  For m <= 2 the JJ
/// algebra structures on the fiber are enumerated as well, giving the
/// index set of the full non-abelian coproduct.
template <class S>
GlobalH2Report<S> global_h2_abelian(const Algebra<S>& a, int m, std::uint64_t cap = 2000000) {
  static_assert(scalar_traits<S>::prime_field, "global enumeration needs a finite field");
  const std::uint64_t p = a.field().modulus;
  const int n = a.dim();
  GlobalH2Report<S> out;
  const int entries = n * m * m;
  double bits = entries * std::log2(double(p));
  std::uint64_t total = 0;
  if (bits > 62) {
    out.truncated = true;
  } else {
    total = 1;
    for (int i = 0; i < entries; ++i) total *= p;
    if (total > cap) out.truncated = true;
  }
  std::uint64_t limit = out.truncated ? cap : total;
  for (std::uint64_t idx = 0; idx < limit; ++idx) {
    std::vector<Mat<S>> rho(n, Mat<S>::Zero(m, m));
    std::uint64_t t = idx;
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
          rho[i](r, c) = Fp(static_cast<long long>(t % p), static_cast<std::uint32_t>(p));
          t /= p;
        }
    ActionData<S> action(a, m, rho);
    if (!is_jj_module(action).holds) continue;
    auto space = abelian_cocycles(a, action);
    std::uint64_t classes = 1;
    for (int k = 0; k < space.h2_dim; ++k) classes *= p;
    out.total_classes += classes;
    out.actions.push_back({std::move(rho), space.h2_dim});
  }
  if (m <= 2) {
    out.fibers_enumerated = true;
    const int slots = tri_count(m) * m;
    std::uint64_t ftotal = 1;
    for (int i = 0; i < slots; ++i) ftotal *= p;
    for (std::uint64_t idx = 0; idx < ftotal; ++idx) {
      Algebra<S> fiber(a.field(), m, CrossedData<S>::fiber_names(m));
      std::uint64_t t = idx;
      for (int x = 0; x < m; ++x)
        for (int y = x; y < m; ++y) {
          Vec<S> v(m);
          for (int s = 0; s < m; ++s) {
            v(s) = Fp(static_cast<long long>(t % p), static_cast<std::uint32_t>(p));
            t /= p;
          }
          fiber.set_product(x, y, v);
          fiber.set_product(y, x, v);
        }
      if (is_jacobi_jordan(fiber)) out.fiber_structures.push_back(std::move(fiber));
    }
  }
  return out;
}

struct Codim1Entry {
  std::vector<int> f_flat;  // row-major entries of f as residues
  int dim_ker{0};
  int dim_im{0};
  std::uint64_t classes_formula{0};
  std::uint64_t classes_orbit{0};
};

struct Codim1Census {
  std::vector<Codim1Entry> entries;
  std::uint64_t total_formula{0};
  std::uint64_t total_orbit{0};
};

/// Census of the pairs (f, v0) with f^2 = 0 and v0 in Ker f over F_p,
/// counted per f in two independent ways: the quotient-dimension formula
/// p^(dim Ker - dim Im) and an explicit orbit count of kernel vectors
/// under the coboundary shifts v0 -> v0 + 2 f(xi).
template <class S>
Codim1Census codim1_census(int m, const FieldSpec& field) {
  static_assert(scalar_traits<S>::prime_field, "census enumeration needs a finite field");
  const std::uint64_t p = field.modulus;
  Codim1Census out;
  const int entries = m * m;
  std::uint64_t total = 1;
  for (int i = 0; i < entries; ++i) total *= p;
  std::uint64_t pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  auto decode_vec = [&](std::uint64_t idx) {
    Vec<S> v(m);
    for (int i = 0; i < m; ++i) {
      v(i) = Fp(static_cast<long long>(idx % p), static_cast<std::uint32_t>(p));
      idx /= p;
    }
    return v;
  };
  auto encode_vec = [&](const Vec<S>& v) {
    std::uint64_t key = 0;
    for (int i = m - 1; i >= 0; --i) key = key * p + static_cast<std::uint64_t>(v(i).v);
    return key;
  };
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Mat<S> f(m, m);
    std::uint64_t t = idx;
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        f(r, c) = Fp(static_cast<long long>(t % p), static_cast<std::uint32_t>(p));
        t /= p;
      }
    if (!is_zero<S>(Mat<S>(f * f))) continue;
    Codim1Entry entry;
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) entry.f_flat.push_back(static_cast<int>(f(r, c).v));
    auto ker = kernel_subspace<S>(f);
    auto im = Subspace<S>::span_of_cols(f);
    entry.dim_ker = ker.dim();
    entry.dim_im = im.dim();
    entry.classes_formula = 1;
    for (int k = 0; k < entry.dim_ker - entry.dim_im; ++k) entry.classes_formula *= p;
    // orbit count: kernel vectors modulo the shifts 2 f(xi)
    std::unordered_set<std::uint64_t> seen;
    std::uint64_t orbits = 0;
    for (std::uint64_t vi = 0; vi < pm; ++vi) {
      Vec<S> v0 = decode_vec(vi);
      if (!is_zero<S>(Vec<S>(f * v0))) continue;
      if (seen.count(encode_vec(v0))) continue;
      ++orbits;
      std::vector<Vec<S>> frontier{v0};
      seen.insert(encode_vec(v0));
      while (!frontier.empty()) {
        Vec<S> cur = frontier.back();
        frontier.pop_back();
        for (std::uint64_t xi = 0; xi < pm; ++xi) {
          Vec<S> shifted = cur + S(2) * (f * decode_vec(xi));
          auto key = encode_vec(shifted);
          if (!seen.count(key)) {
            seen.insert(key);
            frontier.push_back(shifted);
          }
        }
      }
    }
    entry.classes_orbit = orbits;
    out.total_formula += entry.classes_formula;
    out.total_orbit += entry.classes_orbit;
    out.entries.push_back(std::move(entry));
  }
  return out;
}

}  // namespace jja
