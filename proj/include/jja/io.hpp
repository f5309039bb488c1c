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

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "jja/crossed.hpp"

// The .jja file grammar (line oriented, UTF-8, '#' starts a comment):
//
//   jja 1
//   field Q | field Fp <p>
//   dim <n>
//   basis <name> ...              (optional; defaults to b1..bn)
//   mul <x> <y> = <term> [+ <term>]...
//
// with term = <scalar>*<name> or <name>.  Unlisted products are zero.
// Commutative closure is NOT implied: both orders must be listed, or the
// caller passes symmetrize.  Printing is canonical: products in row-major
// index order, terms in basis order, unit coefficients omitted.

namespace jja {

using AnyAlgebra = std::variant<Algebra<Rat>, Algebra<Fp>>;

inline FieldSpec field_of(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return alg.field(); }, a);
}

namespace io_detail {

struct Token {
  std::string text;
  int column{0};  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

inline std::vector<std::pair<int, std::vector<Token>>> logical_lines(const std::string& text) {
  std::vector<std::pair<int, std::vector<Token>>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto toks = tokenize(line);
    if (!toks.empty()) out.push_back({no, std::move(toks)});
  }
  return out;
}

inline long long parse_int(const Token& t, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError("expected an integer, got '" + t.text + "'", line, t.column);
  }
}

template <class S>
Algebra<S> parse_body(const FieldSpec& field,
                      const std::vector<std::pair<int, std::vector<Token>>>& lines,
                      std::size_t cursor, bool symmetrize) {
  if (cursor >= lines.size() || lines[cursor].second[0].text != "dim")
    throw ParseError("expected 'dim <n>'", cursor < lines.size() ? lines[cursor].first : 0, 1);
  const auto& dim_line = lines[cursor];
  if (dim_line.second.size() != 2)
    throw ParseError("expected 'dim <n>'", dim_line.first, dim_line.second[0].column);
  long long n = parse_int(dim_line.second[1], dim_line.first);
  if (n < 0 || n > 4096) throw ParseError("unreasonable dimension", dim_line.first, 1);
  ++cursor;

  std::vector<std::string> names;
  if (cursor < lines.size() && lines[cursor].second[0].text == "basis") {
    const auto& toks = lines[cursor].second;
    for (std::size_t i = 1; i < toks.size(); ++i) names.push_back(toks[i].text);
    if (static_cast<long long>(names.size()) != n)
      throw ParseError("basis lists " + std::to_string(names.size()) + " names for dim " +
                           std::to_string(n),
                       lines[cursor].first, toks[0].column);
    ++cursor;
  }
  Algebra<S> a(field, static_cast<int>(n), names);
  auto index_of = [&](const Token& t, int line) {
    for (int i = 0; i < a.dim(); ++i)
      if (a.names()[i] == t.text) return i;
    throw UnknownBasisName("unknown basis name '" + t.text + "' at line " + std::to_string(line));
  };
  std::vector<bool> listed(static_cast<std::size_t>(n) * n, false);
  for (; cursor < lines.size(); ++cursor) {
    const auto& [line_no, toks] = lines[cursor];
    if (toks[0].text != "mul")
      throw ParseError("expected 'mul', got '" + toks[0].text + "'", line_no, toks[0].column);
    if (toks.size() < 5 || toks[3].text != "=")
      throw ParseError("expected 'mul <x> <y> = <terms>'", line_no, toks[0].column);
    int i = index_of(toks[1], line_no);
    int j = index_of(toks[2], line_no);
    if (listed[static_cast<std::size_t>(i) * n + j])
      throw ParseError("duplicate product '" + toks[1].text + " " + toks[2].text + "'", line_no,
                       toks[1].column);
    Vec<S> value = Vec<S>::Zero(a.dim());
    bool expect_term = true;
    for (std::size_t k = 4; k < toks.size(); ++k) {
      if (!expect_term) {
        if (toks[k].text != "+")
          throw ParseError("expected '+', got '" + toks[k].text + "'", line_no, toks[k].column);
        expect_term = true;
        continue;
      }
      const std::string& term = toks[k].text;
      auto star = term.find('*');
      S coeff = scalar_from_int<S>(field, 1);
      std::string name = term;
      if (star != std::string::npos) {
        try {
          coeff = parse_scalar<S>(field, term.substr(0, star));
        } catch (const Error& e) {
          throw ParseError(e.what(), line_no, toks[k].column);
        }
        name = term.substr(star + 1);
      }
      Token name_tok{name, toks[k].column};
      value(index_of(name_tok, line_no)) += coeff;
      expect_term = false;
    }
    if (expect_term) throw ParseError("dangling '+'", line_no, toks.back().column);
    a.set_product(i, j, value);
    listed[static_cast<std::size_t>(i) * n + j] = true;
  }
  if (symmetrize) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        if (listed[static_cast<std::size_t>(i) * a.dim() + j] &&
            !listed[static_cast<std::size_t>(j) * a.dim() + i])
          a.set_product(j, i, a.product(i, j));
  }
  return a;
}

}  // namespace io_detail

/// Parses the .jja grammar; ParseError carries the line and column.
inline AnyAlgebra parse_algebra(const std::string& text, bool symmetrize = false) {
  auto lines = io_detail::logical_lines(text);
  std::size_t cursor = 0;
  if (cursor < lines.size() && lines[cursor].second[0].text == "jja") {
    const auto& toks = lines[cursor].second;
    if (toks.size() != 2 || toks[1].text != "1")
      throw ParseError("unsupported format version", lines[cursor].first, toks[0].column);
    ++cursor;
  }
  if (cursor >= lines.size() || lines[cursor].second[0].text != "field")
    throw ParseError("expected 'field Q' or 'field Fp <p>'",
                     cursor < lines.size() ? lines[cursor].first : 0, 1);
  const auto& [field_line, ftoks] = lines[cursor];
  FieldSpec field;
  if (ftoks.size() == 2 && ftoks[1].text == "Q") {
    field = FieldSpec::rationals();
  } else if (ftoks.size() == 3 && ftoks[1].text == "Fp") {
    long long p = io_detail::parse_int(ftoks[2], field_line);
    if (p < 2 || p > 2147483647) throw NonPrimeModulus("modulus out of range");
    field = FieldSpec::prime(static_cast<std::uint32_t>(p));  // NonPrimeModulus if composite
  } else {
    throw ParseError("expected 'field Q' or 'field Fp <p>'", field_line, ftoks[0].column);
  }
  ++cursor;
  if (field.is_prime_field())
    return io_detail::parse_body<Fp>(field, lines, cursor, symmetrize);
  return io_detail::parse_body<Rat>(field, lines, cursor, symmetrize);
}

template <class S>
std::string print_algebra(const Algebra<S>& a) {
  std::ostringstream out;
  out << "jja 1\n";
  out << "field " << a.field().str() << "\n";
  out << "dim " << a.dim() << "\n";
  if (a.dim() > 0) {
    out << "basis";
    for (const auto& name : a.names()) out << " " << name;
    out << "\n";
  }
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      Vec<S> v = a.product(i, j);
      if (is_zero<S>(v)) continue;
      out << "mul " << a.names()[i] << " " << a.names()[j] << " =";
      bool first = true;
      for (int k = 0; k < a.dim(); ++k) {
        if (v(k) == S(0)) continue;
        out << (first ? " " : " + ");
        if (!(v(k) == S(1))) out << print_scalar(v(k)) << "*";
        out << a.names()[k];
        first = false;
      }
      out << "\n";
    }
  return out.str();
}

inline std::string print_algebra(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return print_algebra(alg); }, a);
}

// The .jjx crossed-data grammar:
//
//   jjx 1
//   base <file.jja>
//   fiber <m>
//   action <name> = a11 a12 ; a21 a22        (m x m, rows ';'-separated)
//   cocycle <x> <y> = c1 ... cm              (symmetrized automatically)
//   vmul v<i> v<j> = c1 ... cm               (fiber products, symmetric)
//
// Unset entries are zero.

/// The base file reference, needed before the base algebra can be loaded.
inline std::string crossed_base_reference(const std::string& text) {
  for (const auto& [line_no, toks] : io_detail::logical_lines(text)) {
    if (toks[0].text == "jjx") continue;
    if (toks[0].text == "base" && toks.size() == 2) return toks[1].text;
    throw ParseError("expected 'base <file>'", line_no, toks[0].column);
  }
  throw ParseError("missing 'base <file>' line", 1, 1);
}

template <class S>
CrossedData<S> parse_crossed(const std::string& text, const Algebra<S>& base) {
  auto lines = io_detail::logical_lines(text);
  std::size_t cursor = 0;
  auto expect = [&](const std::string& kw) {
    return cursor < lines.size() && lines[cursor].second[0].text == kw;
  };
  if (expect("jjx")) ++cursor;
  if (!expect("base")) throw ParseError("expected 'base <file>'", 1, 1);
  ++cursor;
  if (!expect("fiber") || lines[cursor].second.size() != 2)
    throw ParseError("expected 'fiber <m>'", cursor < lines.size() ? lines[cursor].first : 0, 1);
  int m = static_cast<int>(io_detail::parse_int(lines[cursor].second[1], lines[cursor].first));
  if (m < 0 || m > 256) throw ParseError("unreasonable fiber dimension", lines[cursor].first, 1);
  ++cursor;

  CrossedData<S> d = CrossedData<S>::trivial(base, m);
  const auto& field = base.field();
  auto base_index = [&](const io_detail::Token& t, int line_no) {
    for (int i = 0; i < base.dim(); ++i)
      if (base.names()[i] == t.text) return i;
    throw UnknownBasisName("unknown base name '" + t.text + "' at line " + std::to_string(line_no));
  };
  auto fiber_index = [&](const io_detail::Token& t, int line_no) {
    for (int i = 0; i < m; ++i)
      if (d.fiber_mult.names()[i] == t.text) return i;
    throw UnknownBasisName("unknown fiber name '" + t.text + "' at line " +
                           std::to_string(line_no));
  };
  auto parse_scalars = [&](const std::vector<io_detail::Token>& toks, std::size_t from,
                           int line_no) {
    std::vector<S> out;
    for (std::size_t k = from; k < toks.size(); ++k) {
      try {
        out.push_back(parse_scalar<S>(field, toks[k].text));
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no, toks[k].column);
      }
    }
    return out;
  };
  for (; cursor < lines.size(); ++cursor) {
    const auto& [line_no, toks] = lines[cursor];
    const std::string& kw = toks[0].text;
    if (kw == "action") {
      if (toks.size() < 4 || toks[2].text != "=")
        throw ParseError("expected 'action <name> = entries'", line_no, toks[0].column);
      int i = base_index(toks[1], line_no);
      Mat<S> rho(m, m);
      int r = 0, c = 0;
      for (std::size_t k = 3; k < toks.size(); ++k) {
        if (toks[k].text == ";") {
          if (c != m) throw ParseError("row has wrong length", line_no, toks[k].column);
          ++r;
          c = 0;
          continue;
        }
        if (r >= m || c >= m) throw ParseError("too many entries", line_no, toks[k].column);
        try {
          rho(r, c++) = parse_scalar<S>(field, toks[k].text);
        } catch (const Error& e) {
          throw ParseError(e.what(), line_no, toks[k].column);
        }
      }
      if (!(r == m - 1 && c == m) && !(m == 0))
        throw ParseError("action matrix has wrong shape", line_no, toks[0].column);
      d.action.rho[i] = rho;
    } else if (kw == "cocycle") {
      if (toks.size() != static_cast<std::size_t>(4 + m) || toks[3].text != "=")
        throw ParseError("expected 'cocycle <x> <y> = c1 .. cm'", line_no, toks[0].column);
      int i = base_index(toks[1], line_no);
      int j = base_index(toks[2], line_no);
      auto vals = parse_scalars(toks, 4, line_no);
      Vec<S> v(m);
      for (int k = 0; k < m; ++k) v(k) = vals[k];
      d.cocycle.set_symmetric(i, j, v);
    } else if (kw == "vmul") {
      if (toks.size() != static_cast<std::size_t>(4 + m) || toks[3].text != "=")
        throw ParseError("expected 'vmul <x> <y> = c1 .. cm'", line_no, toks[0].column);
      int x = fiber_index(toks[1], line_no);
      int y = fiber_index(toks[2], line_no);
      auto vals = parse_scalars(toks, 4, line_no);
      Vec<S> v(m);
      for (int k = 0; k < m; ++k) v(k) = vals[k];
      d.fiber_mult.set_product(x, y, v);
      d.fiber_mult.set_product(y, x, v);
    } else {
      throw ParseError("expected 'action', 'cocycle' or 'vmul'", line_no, toks[0].column);
    }
  }
  return d;
}

template <class S>
std::string print_crossed(const CrossedData<S>& d, const std::string& base_ref) {
  std::ostringstream out;
  out << "jjx 1\n";
  out << "base " << base_ref << "\n";
  out << "fiber " << d.fiber_dim << "\n";
  const int n = d.base.dim(), m = d.fiber_dim;
  for (int i = 0; i < n; ++i) {
    if (is_zero<S>(d.action.rho[i])) continue;
    out << "action " << d.base.names()[i] << " =";
    for (int r = 0; r < m; ++r) {
      if (r) out << " ;";
      for (int c = 0; c < m; ++c) out << " " << print_scalar(d.action.rho[i](r, c));
    }
    out << "\n";
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vec<S> v = d.cocycle.value(i, j);
      if (is_zero<S>(v)) continue;
      out << "cocycle " << d.base.names()[i] << " " << d.base.names()[j] << " =";
      for (int k = 0; k < m; ++k) out << " " << print_scalar(v(k));
      out << "\n";
    }
  for (int x = 0; x < m; ++x)
    for (int y = x; y < m; ++y) {
      Vec<S> v = d.fiber_mult.product(x, y);
      if (is_zero<S>(v)) continue;
      out << "vmul " << d.fiber_mult.names()[x] << " " << d.fiber_mult.names()[y] << " =";
      for (int k = 0; k < m; ++k) out << " " << print_scalar(v(k));
      out << "\n";
    }
  return out.str();
}

}  // namespace jja
