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
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "jja/errors.hpp"

namespace jja {

/// Exact rational scalar (arbitrary precision, always canonical).
/// Expression templates are off so values evaluate eagerly inside Eigen
/// kernels; lazy references would alias during in-place row operations.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

enum class FieldKind { Rationals, PrimeField };

/// Runtime description of the coefficient domain: the rationals or F_p.
struct FieldSpec {
  FieldKind kind{FieldKind::Rationals};
  std::uint32_t modulus{0};  // prime, PrimeField only

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::uint32_t p) {
    if (!is_prime_u32(p)) throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::PrimeField, p};
  }
  bool is_prime_field() const { return kind == FieldKind::PrimeField; }
  std::uint32_t characteristic() const { return is_prime_field() ? modulus : 0; }
  bool operator==(const FieldSpec& o) const { return kind == o.kind && modulus == o.modulus; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
  std::string str() const {
    return is_prime_field() ? "Fp " + std::to_string(modulus) : "Q";
  }
};

/// Element of a prime field F_p with the modulus carried at runtime.
///
/// A default/int-constructed value has p == 0 and behaves as an integer
/// literal: the first arithmetic contact with a modulus-carrying value
/// reduces it.  This is what lets Eigen use Scalar(0) / Scalar(1) freely
/// inside generic kernels.  Mixing two distinct moduli throws FieldMismatch.
struct Fp {
  std::int64_t v{0};
  std::uint32_t p{0};

  Fp() = default;
  Fp(long long x) : v(x) {}  // NOLINT: implicit by design (literals)
  Fp(long long x, std::uint32_t m) : p(m) {
    v = x % static_cast<std::int64_t>(m);
    if (v < 0) v += m;
  }

  bool is_literal() const { return p == 0; }

  static std::uint32_t join(std::uint32_t a, std::uint32_t b) {
    if (a && b && a != b) throw FieldMismatch("mixed moduli " + std::to_string(a) + " and " + std::to_string(b));
    return a ? a : b;
  }
  Fp lifted(std::uint32_t m) const { return m == 0 || p == m ? *this : Fp(v, m); }

  friend Fp operator+(const Fp& a, const Fp& b) {
    auto m = join(a.p, b.p);
    return m ? Fp(a.lifted(m).v + b.lifted(m).v, m) : Fp(a.v + b.v);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    auto m = join(a.p, b.p);
    return m ? Fp(a.lifted(m).v - b.lifted(m).v, m) : Fp(a.v - b.v);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    auto m = join(a.p, b.p);
    return m ? Fp(a.lifted(m).v * b.lifted(m).v, m) : Fp(a.v * b.v);
  }
  Fp operator-() const { return p ? Fp(-v, p) : Fp(-v); }

  /// Multiplicative inverse by extended Euclid; requires a modulus.
  Fp inverse() const {
    if (p == 0) {
      if (v == 1 || v == -1) return *this;
      throw FieldMismatch("cannot invert a modulus-free literal");
    }
    if (v == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p));
    std::int64_t t = 0, new_t = 1, r = p, new_r = v;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    return Fp(t, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    auto m = join(a.p, b.p);
    if (m == 0) return a * b.inverse();  // only +-1 literals divide
    return a.lifted(m) * b.lifted(m).inverse();
  }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    auto m = join(a.p, b.p);
    return m ? a.lifted(m).v == b.lifted(m).v : a.v == b.v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline Fp abs(const Fp& a) { return a; }  // exact scalar, magnitude-free

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool prime_field = false;
  static Rat from_int(const FieldSpec&, long long x) { return Rat(x); }
  static bool belongs(const FieldSpec& f, const Rat&) { return !f.is_prime_field(); }
  static Rat canonical(const FieldSpec&, const Rat& s) { return s; }
};

template <>
struct scalar_traits<Fp> {
  static constexpr bool prime_field = true;
  static Fp from_int(const FieldSpec& f, long long x) { return Fp(x, f.modulus); }
  static bool belongs(const FieldSpec& f, const Fp& s) {
    return f.is_prime_field() && (s.p == 0 || s.p == f.modulus);
  }
  static Fp canonical(const FieldSpec& f, const Fp& s) {
    if (s.p != 0 && s.p != f.modulus)
      throw FieldMismatch("scalar from F_" + std::to_string(s.p) + " used in " + f.str());
    return s.lifted(f.modulus);
  }
};

template <class S>
S scalar_from_int(const FieldSpec& f, long long x) {
  return scalar_traits<S>::from_int(f, x);
}

/// All p field elements 0, 1, ..., p-1 in order; NotEnumerable over Q.
template <class S>
std::vector<S> enumerate_field(const FieldSpec& f) {
  if constexpr (!scalar_traits<S>::prime_field) {
    throw NotEnumerable("the rationals are not enumerable");
  } else {
    if (!f.is_prime_field()) throw NotEnumerable("the rationals are not enumerable");
    std::vector<S> out;
    out.reserve(f.modulus);
    for (std::uint32_t i = 0; i < f.modulus; ++i) out.emplace_back(i, f.modulus);
    return out;
  }
}

inline std::string print_scalar(const Rat& s) { return s.str(); }
inline std::string print_scalar(const Fp& s) { return std::to_string(s.v); }

/// Scalar text syntax: optional sign, integer, or a/b with b > 0 (rationals);
/// bare (possibly signed) integer reduced mod p (prime fields).
template <class S>
S parse_scalar(const FieldSpec& f, const std::string& text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& m) -> S { throw Error("bad scalar '" + text + "': " + m); };
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) return fail("expected digits");
  std::string num = text.substr(num_start, i - num_start);
  std::string den;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start) return fail("expected digits after '/'");
    den = text.substr(den_start, i - den_start);
  }
  if (i != text.size()) return fail("trailing characters");
  if constexpr (scalar_traits<S>::prime_field) {
    if (!den.empty()) return fail("fractions are not valid F_p scalars");
    Fp acc(0, f.modulus);
    Fp ten(10, f.modulus);
    for (char c : num) acc = acc * ten + Fp(c - '0', f.modulus);
    return neg ? -acc : acc;
  } else {
    Rat r = den.empty() ? Rat(boost::multiprecision::mpz_int(num))
                        : Rat(boost::multiprecision::mpz_int(num), boost::multiprecision::mpz_int(den));
    if (!den.empty() && boost::multiprecision::mpz_int(den) == 0) return fail("zero denominator");
    return neg ? Rat(-r) : r;
  }
}

/// Deterministic seeded randomness; all draws reduce explicitly so results
/// are identical across platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t u64() { return gen_(); }
  std::uint64_t below(std::uint64_t n) { return n ? gen_() % n : 0; }

  template <class S>
  S scalar(const FieldSpec& f) {
    if constexpr (scalar_traits<S>::prime_field) {
      return Fp(static_cast<long long>(below(f.modulus)), f.modulus);
    } else {
      long long num = static_cast<long long>(below(19)) - 9;
      long long den = static_cast<long long>(below(9)) + 1;
      return Rat(num, den);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace jja

namespace Eigen {

template <>
struct NumTraits<jja::Fp> : GenericNumTraits<jja::Fp> {
  typedef jja::Fp Real;
  typedef jja::Fp NonInteger;
  typedef jja::Fp Nested;
  typedef jja::Fp Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 9
  };
  static inline jja::Fp epsilon() { return jja::Fp(0); }
  static inline jja::Fp dummy_precision() { return jja::Fp(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
