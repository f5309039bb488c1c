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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jja/cohomology.hpp"
#include "jja/coflag.hpp"
#include "jja/families.hpp"
#include "jja/frobenius.hpp"
#include "jja/io.hpp"
#include "jja/iso.hpp"
#include "jja/yangbaxter.hpp"

// Command-line surface.  Every subcommand prints deterministic key=value
// lines (the json-like-lines format).  Exit codes: 0 positive/ok,
// 1 negative verdict, 2 unknown/undetermined, 3 usage or parse error,
// 4 domain error.

namespace jja::cli {

struct CliResult {
  int code{0};
  std::string out;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

inline FieldSpec parse_field_arg(std::string text) {
  if (text == "Q") return FieldSpec::rationals();
  if (text.rfind("Fp", 0) == 0) {
    std::string rest = text.substr(2);
    if (!rest.empty() && (rest[0] == ':' || rest[0] == ' ')) rest = rest.substr(1);
    try {
      return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(rest)));
    } catch (const NonPrimeModulus&) {
      throw;
    } catch (...) {
      throw Error("bad field '" + text + "'");
    }
  }
  throw Error("bad field '" + text + "' (use Q, Fp5, Fp:5)");
}

template <class S>
Mat<S> parse_cli_matrix(const FieldSpec& f, const std::string& text) {
  std::vector<std::vector<S>> rows;
  std::istringstream in(text);
  std::string row;
  while (std::getline(in, row, ';')) {
    std::vector<S> entries;
    std::istringstream rin(row);
    std::string cell;
    while (std::getline(rin, cell, ',')) entries.push_back(parse_scalar<S>(f, cell));
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw Error("empty matrix");
  Mat<S> m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

template <class S>
Vec<S> parse_cli_vector(const FieldSpec& f, const std::string& text) {
  std::vector<S> entries;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) entries.push_back(parse_scalar<S>(f, cell));
  Vec<S> v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) v(i) = entries[i];
  return v;
}

template <class S>
std::string fmt_vec(const Vec<S>& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += print_scalar(v(i));
  }
  return s;
}

template <class S>
std::string fmt_mat(const Mat<S>& m) {
  std::string s;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) s += ";";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) s += ",";
      s += print_scalar(m(r, c));
    }
  }
  return s;
}

inline std::string fmt_dims(const std::vector<int>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s;
}

/// Linear combination grammar for --central: "<coeff>*<name> + <name>".
template <class S>
Vec<S> parse_combination(const Algebra<S>& a, const std::string& text) {
  Vec<S> v = Vec<S>::Zero(a.dim());
  std::istringstream in(text);
  std::string term;
  while (std::getline(in, term, '+')) {
    // trim
    auto b = term.find_first_not_of(" \t");
    auto e = term.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error("empty term in '" + text + "'");
    term = term.substr(b, e - b + 1);
    auto star = term.find('*');
    S coeff = scalar_from_int<S>(a.field(), 1);
    std::string name = term;
    if (star != std::string::npos) {
      coeff = parse_scalar<S>(a.field(), term.substr(0, star));
      name = term.substr(star + 1);
    }
    bool found = false;
    for (int i = 0; i < a.dim(); ++i)
      if (a.names()[i] == name) {
        v(i) += coeff;
        found = true;
        break;
      }
    if (!found) throw UnknownBasisName("unknown basis name '" + name + "'");
  }
  return v;
}

inline std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("JJ_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw Error("bad JJ_SEED value");
    }
  }
  return flag_seed;
}

inline std::optional<std::string> steps_str(const std::optional<int>& step) {
  return step ? std::optional<std::string>(std::to_string(*step)) : std::optional<std::string>("not");
}

}  // namespace detail

inline CliResult run(const std::vector<std::string>& args) {
  using namespace detail;
  std::ostringstream out;
  int code = 0;

  CLI::App app{"exact arithmetic for Jacobi-Jordan algebras"};
  app.name("jja");
  app.require_subcommand(1);
  std::string format = "json-like-lines";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json-like-lines"}));
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker count (current build runs single-threaded)")
      ->check(CLI::PositiveNumber);

  // ---- check ----
  auto* check_cmd = app.add_subcommand("check", "verify the JJ axioms of an algebra file");
  std::string check_file;
  bool check_sym = false;
  check_cmd->add_option("file", check_file)->required();
  check_cmd->add_flag("--symmetrize", check_sym, "imply commutative closure of mul lines");

  // ---- analyze ----
  auto* analyze_cmd = app.add_subcommand("analyze", "axioms, series, center, metabelian report");
  std::string analyze_file;
  bool analyze_sym = false;
  analyze_cmd->add_option("file", analyze_file)->required();
  analyze_cmd->add_flag("--symmetrize", analyze_sym);

  // ---- frobenius ----
  auto* frob_cmd = app.add_subcommand("frobenius", "invariant forms and Frobenius certificates");
  std::string frob_file;
  int frob_trials = 200;
  std::uint64_t frob_seed = 1, frob_cap = 100000;
  frob_cmd->add_option("file", frob_file)->required();
  frob_cmd->add_option("--trials", frob_trials);
  frob_cmd->add_option("--seed", frob_seed);
  frob_cmd->add_option("--exhaustive-cap", frob_cap);

  // ---- qybe ----
  auto* qybe_cmd = app.add_subcommand("qybe", "build R and check the Yang-Baxter equation");
  std::string qybe_file, qybe_alpha = "1", qybe_central, qybe_emit;
  qybe_cmd->add_option("file", qybe_file)->required();
  qybe_cmd->add_option("--alpha", qybe_alpha);
  qybe_cmd->add_option("--central", qybe_central, "e.g. \"z\" or \"2*y + 1*z\"")->required();
  qybe_cmd->add_option("--emit-r", qybe_emit, "write R as a plain-text matrix");

  // ---- crossed ----
  auto* crossed_cmd = app.add_subcommand("crossed", "validate crossed data, emit the product");
  std::string crossed_file, crossed_out;
  crossed_cmd->add_option("file", crossed_file)->required();
  crossed_cmd->add_option("-o,--output", crossed_out, "write the crossed product");

  // ---- cohomology ----
  auto* coh_cmd = app.add_subcommand("cohomology", "cocycle spaces and their dimensions");
  std::string coh_file;
  bool coh_coflag = false, coh_trivial = false, coh_global = false;
  int coh_fiber = 1;
  std::uint64_t coh_cap = 2000000;
  coh_cmd->add_option("file", coh_file)->required();
  coh_cmd->add_flag("--coflag", coh_coflag, "lambda list and per-lambda H2 (default)");
  coh_cmd->add_flag("--trivial-action", coh_trivial, "H2 for the trivial action");
  coh_cmd->add_flag("--global", coh_global, "decompose H2(A, V_0) over all module structures");
  coh_cmd->add_option("--fiber", coh_fiber, "fiber dimension m");
  coh_cmd->add_option("--cap", coh_cap, "enumeration cap for --global");

  // ---- coflag ----
  auto* coflag_cmd = app.add_subcommand("coflag", "co-flag data of an algebra");
  std::string coflag_file, coflag_reps;
  bool coflag_census = false;
  std::uint64_t coflag_cap = 100000, coflag_nodecap = 10000000;
  coflag_cmd->add_option("file", coflag_file)->required();
  coflag_cmd->add_flag("--census", coflag_census, "count plain-isomorphism classes (F_p only)");
  coflag_cmd->add_option("--census-cap", coflag_cap);
  coflag_cmd->add_option("--aut-node-cap", coflag_nodecap);
  coflag_cmd->add_option("--emit-reps", coflag_reps, "directory for representative files");

  // ---- iso ----
  auto* iso_cmd = app.add_subcommand("iso", "decide isomorphism of two algebra files");
  std::string iso_a, iso_b;
  std::uint64_t iso_cap = 10000000;
  iso_cmd->add_option("a", iso_a)->required();
  iso_cmd->add_option("b", iso_b)->required();
  iso_cmd->add_option("--cap", iso_cap, "backtracking node cap");

  // ---- aut ----
  auto* aut_cmd = app.add_subcommand("aut", "enumerate the automorphism group");
  std::string aut_file;
  std::uint64_t aut_cap = 10000000;
  bool aut_list = false;
  aut_cmd->add_option("file", aut_file)->required();
  aut_cmd->add_option("--cap", aut_cap);
  aut_cmd->add_flag("--list", aut_list, "print the elements");

  // ---- family ----
  auto* fam_cmd = app.add_subcommand("family", "construct a named algebra family");
  std::string fam_name, fam_field = "Q", fam_out;
  int fam_n = 1, fam_t = 1;
  std::string fam_X, fam_Y, fam_Z, fam_A, fam_B, fam_C, fam_f, fam_v0, fam_theta;
  fam_cmd->add_option("name", fam_name,
                      "abelian|heisenberg|a12|a_xyz|heis_abc|v_f_v0|kn_x_v0|a_theta|j_t")
      ->required();
  fam_cmd->add_option("--field", fam_field, "Q, Fp5, Fp:5");
  fam_cmd->add_option("--n", fam_n);
  fam_cmd->add_option("--t", fam_t);
  fam_cmd->add_option("--X", fam_X, "matrix rows 'a,b;c,d'");
  fam_cmd->add_option("--Y", fam_Y);
  fam_cmd->add_option("--Z", fam_Z);
  fam_cmd->add_option("--A", fam_A);
  fam_cmd->add_option("--B", fam_B);
  fam_cmd->add_option("--C", fam_C);
  fam_cmd->add_option("--f", fam_f);
  fam_cmd->add_option("--v0", fam_v0, "vector 'a,b'");
  fam_cmd->add_option("--theta", fam_theta);
  fam_cmd->add_option("-o,--output", fam_out);

  // ---- census ----
  auto* census_cmd = app.add_subcommand("census", "brute-force classification censuses");
  std::string census_kind, census_field = "Fp5";
  int census_n = 2, census_fiber = 2;
  census_cmd->add_option("--kind", census_kind, "sym-homothety|codim1")->required();
  census_cmd->add_option("--field", census_field);
  census_cmd->add_option("--n", census_n, "form size for sym-homothety");
  census_cmd->add_option("--fiber", census_fiber, "V dimension for codim1");

  std::vector<const char*> argv;
  argv.push_back("jja");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    int rc = app.exit(e, help, help);
    return {rc == 0 ? 0 : 3, help.str()};
  }

  auto emit = [&](const std::string& key, const std::string& value) {
    out << key << "=" << value << "\n";
  };

  try {
    if (*check_cmd) {
      auto any = parse_algebra(read_file(check_file), check_sym);
      std::visit(
          [&](const auto& a) {
            bool comm = is_commutative(a);
            auto defects = jacobi_defects(a);
            emit("commutative", comm ? "true" : "false");
            emit("jacobi", defects.empty() ? "true" : "false");
            emit("jacobi_defects", std::to_string(defects.size()));
            bool jj = comm && defects.empty();
            emit("jacobi_jordan", jj ? "true" : "false");
            code = jj ? 0 : 1;
          },
          any);
    } else if (*analyze_cmd) {
      auto any = parse_algebra(read_file(analyze_file), analyze_sym);
      std::visit(
          [&](const auto& a) {
            auto rep = analyze(a);
            emit("dim", std::to_string(a.dim()));
            emit("commutative", rep.commutative ? "true" : "false");
            emit("jacobi_jordan", rep.jacobi_jordan() ? "true" : "false");
            emit("leibniz", rep.leibniz ? "true" : "false");
            if (rep.commutative) emit("jordan", rep.jordan ? "true" : "false");
            emit("derived_series_dims", fmt_dims(rep.series.derived_series_dims));
            emit("lower_central_dims", fmt_dims(rep.series.lower_central_dims));
            emit("solvability_step", *steps_str(rep.series.solvability_step));
            emit("nilpotency_step", *steps_str(rep.series.nilpotency_step));
            emit("center_dim", std::to_string(rep.center.dim()));
            emit("metabelian", rep.metabelian ? "true" : "false");
          },
          any);
    } else if (*frob_cmd) {
      auto any = parse_algebra(read_file(frob_file));
      std::visit(
          [&](const auto& a) {
            using S = std::decay_t<decltype(a.gamma()(0, 0))>;
            auto space = invariant_form_space(a);
            emit("form_space_dim", std::to_string(space.basis_forms.size()));
            emit("common_radical_dim", std::to_string(space.common_radical.dim()));
            auto v = is_frobenius(a, frob_trials, effective_seed(frob_seed), frob_cap);
            if (v.kind == FrobeniusKind::Frobenius) {
              emit("verdict", "frobenius");
              emit("certificate", fmt_mat<S>(*v.certificate));
              emit("certificate_det", print_scalar(determinant<S>(*v.certificate)));
              code = 0;
            } else if (v.kind == FrobeniusKind::NotFrobenius) {
              emit("verdict", "not_frobenius");
              emit("radical_witness", fmt_vec<S>(*v.radical_witness));
              code = 1;
            } else {
              emit("verdict", "undetermined");
              code = 2;
            }
          },
          any);
    } else if (*qybe_cmd) {
      auto any = parse_algebra(read_file(qybe_file));
      std::visit(
          [&](const auto& a) {
            using S = std::decay_t<decltype(a.gamma()(0, 0))>;
            S alpha = parse_scalar<S>(a.field(), qybe_alpha);
            Vec<S> central = parse_combination(a, qybe_central);
            auto ctx = build_R(a, alpha, central);
            auto res = check_qybe(ctx);
            emit("holds", res.holds ? "true" : "false");
            emit("residual_rank", std::to_string(res.residual_rank));
            if (!qybe_emit.empty()) {
              std::ostringstream rtext;
              for (Eigen::Index r = 0; r < ctx.r.rows(); ++r) {
                for (Eigen::Index c = 0; c < ctx.r.cols(); ++c) {
                  if (c) rtext << " ";
                  rtext << print_scalar(ctx.r(r, c));
                }
                rtext << "\n";
              }
              write_file(qybe_emit, rtext.str());
              emit("r_written", qybe_emit);
            }
            code = res.holds ? 0 : 1;
          },
          any);
    } else if (*crossed_cmd) {
      std::string text = read_file(crossed_file);
      std::string base_ref = crossed_base_reference(text);
      auto base_path = std::filesystem::path(crossed_file).parent_path() / base_ref;
      auto base_any = parse_algebra(read_file(base_path.string()));
      std::visit(
          [&](const auto& base) {
            using S = std::decay_t<decltype(base.gamma()(0, 0))>;
            auto d = parse_crossed<S>(text, base);
            auto rep = validate_crossed_system(d);
            emit("valid", rep.ok ? "true" : "false");
            emit("defects", std::to_string(rep.defects.size()));
            for (std::size_t i = 0; i < rep.defects.size() && i < 16; ++i) {
              const auto& def = rep.defects[i];
              emit("defect" + std::to_string(i),
                   def.axiom + ":" + std::to_string(def.i) + "," + std::to_string(def.j) + "," +
                       std::to_string(def.l));
            }
            if (rep.ok) {
              auto e = crossed_product(d);
              emit("product_dim", std::to_string(e.dim()));
              emit("product_jacobi_jordan", is_jacobi_jordan(e) ? "true" : "false");
              if (!crossed_out.empty()) {
                write_file(crossed_out, print_algebra(e));
                emit("product_written", crossed_out);
              }
              code = 0;
            } else {
              code = 1;
            }
          },
          base_any);
    } else if (*coh_cmd) {
      auto any = parse_algebra(read_file(coh_file));
      if (!coh_coflag && !coh_trivial && !coh_global) coh_coflag = true;
      std::visit(
          [&](const auto& a) {
            using S = std::decay_t<decltype(a.gamma()(0, 0))>;
            if (coh_coflag) {
              auto lams = coflag_lambdas(a);
              emit("lambda_count", std::to_string(lams.lambdas.size()));
              emit("lambdas_complete", lams.complete ? "true" : "false");
              for (std::size_t k = 0; k < lams.lambdas.size(); ++k) {
                auto space = coflag_cohomology(a, lams.lambdas[k]);
                std::string suffix = std::to_string(k);
                emit("lambda" + suffix, fmt_vec<S>(lams.lambdas[k]));
                emit("z2_dim" + suffix, std::to_string(space.z2.dim()));
                emit("b2_dim" + suffix, std::to_string(space.b2.dim()));
                emit("h2_dim" + suffix, std::to_string(space.h2_dim));
                if (k == 0 && is_zero<S>(lams.lambdas[k]))
                  emit("h2_dim", std::to_string(space.h2_dim));
              }
            }
            if (coh_trivial) {
              auto space = abelian_cocycles(a, ActionData<S>::trivial(a, coh_fiber));
              emit("trivial_z2_dim", std::to_string(space.z2.dim()));
              emit("trivial_b2_dim", std::to_string(space.b2.dim()));
              emit("trivial_h2_dim", std::to_string(space.h2_dim));
            }
            if (coh_global) {
              if constexpr (scalar_traits<S>::prime_field) {
                auto rep = global_h2_abelian<S>(a, coh_fiber, coh_cap);
                emit("global_truncated", rep.truncated ? "true" : "false");
                emit("global_actions", std::to_string(rep.actions.size()));
                emit("global_total_classes", std::to_string(rep.total_classes));
                if (rep.fibers_enumerated)
                  emit("global_fiber_structures", std::to_string(rep.fiber_structures.size()));
              } else {
                throw NotEnumerable("--global needs a prime field");
              }
            }
          },
          any);
    } else if (*coflag_cmd) {
      auto any = parse_algebra(read_file(coflag_file));
      std::visit(
          [&](const auto& a) {
            using S = std::decay_t<decltype(a.gamma()(0, 0))>;
            auto lams = coflag_lambdas(a);
            emit("lambda_count", std::to_string(lams.lambdas.size()));
            emit("lambdas_complete", lams.complete ? "true" : "false");
            std::vector<CocycleSpace<S>> spaces;
            for (std::size_t k = 0; k < lams.lambdas.size(); ++k) {
              spaces.push_back(coflag_cohomology(a, lams.lambdas[k]));
              std::string suffix = std::to_string(k);
              emit("lambda" + suffix, fmt_vec<S>(lams.lambdas[k]));
              emit("h2_dim" + suffix, std::to_string(spaces.back().h2_dim));
            }
            if (!coflag_reps.empty()) {
              std::filesystem::create_directories(coflag_reps);
              for (std::size_t k = 0; k < lams.lambdas.size(); ++k) {
                CoflagDatum<S> d(a, lams.lambdas[k], Mat<S>(Mat<S>::Zero(a.dim(), a.dim())));
                auto path = std::filesystem::path(coflag_reps) /
                            ("lambda" + std::to_string(k) + "_rep.jja");
                write_file(path.string(), print_algebra(build_coflag_algebra(d)));
                emit("rep" + std::to_string(k), path.string());
              }
            }
            if (coflag_census) {
              if constexpr (!scalar_traits<S>::prime_field) {
                throw NotEnumerable("--census needs a prime field");
              } else {
                const std::uint64_t p = a.field().modulus;
                auto auts = automorphisms(a, coflag_nodecap);
                std::vector<CoflagDatum<S>> reps;
                for (std::size_t k = 0; k < lams.lambdas.size(); ++k) {
                  const auto& space = spaces[k];
                  std::uint64_t total = 1;
                  bool capped = false;
                  for (int i = 0; i < space.z2.dim(); ++i) {
                    total *= p;
                    if (total > coflag_cap) {
                      capped = true;
                      break;
                    }
                  }
                  if (capped) throw CapExceeded("census space exceeds --census-cap");
                  for (std::uint64_t idx = 0; idx < total; ++idx) {
                    Vec<S> combo = Vec<S>::Zero(space.z2.ambient_dim());
                    std::uint64_t t = idx;
                    for (int i = 0; i < space.z2.dim(); ++i) {
                      combo += Fp(static_cast<long long>(t % p),
                                  static_cast<std::uint32_t>(p)) *
                               space.z2.basis_vector(i);
                      t /= p;
                    }
                    auto theta_map = space.unpack(combo);
                    Mat<S> theta(a.dim(), a.dim());
                    for (int i = 0; i < a.dim(); ++i)
                      for (int j = 0; j < a.dim(); ++j) theta(i, j) = theta_map.value(i, j)(0);
                    CoflagDatum<S> d(a, lams.lambdas[k], theta);
                    bool matched = false;
                    for (const auto& r : reps)
                      if (cp_equivalent(d, r, auts.elements, true).kind == CpKind::Yes) {
                        matched = true;
                        break;
                      }
                    if (!matched) reps.push_back(d);
                  }
                }
                emit("classes_cp", std::to_string(reps.size()));
              }
            }
          },
          any);
    } else if (*iso_cmd) {
      auto any_a = parse_algebra(read_file(iso_a));
      auto any_b = parse_algebra(read_file(iso_b));
      if (field_of(any_a) != field_of(any_b)) throw FieldMismatch("files over different fields");
      std::visit(
          [&](const auto& a) {
            using S = std::decay_t<decltype(a.gamma()(0, 0))>;
            const auto& b = std::get<Algebra<S>>(any_b);
            auto v = isomorphic(a, b, iso_cap);
            switch (v.kind) {
              case IsoKind::Yes:
                emit("verdict", "yes");
                emit("certificate", fmt_mat<S>(*v.iso));
                code = 0;
                break;
              case IsoKind::NoInvariant:
                emit("verdict", "no");
                emit("reason", "invariant:" + v.invariant);
                code = 1;
                break;
              case IsoKind::NoExhausted:
                emit("verdict", "no");
                emit("reason", "exhausted");
                code = 1;
                break;
              case IsoKind::Unknown:
                emit("verdict", "unknown");
                code = 2;
                break;
            }
            emit("nodes", std::to_string(v.nodes));
          },
          any_a);
    } else if (*aut_cmd) {
      auto any = parse_algebra(read_file(aut_file));
      std::visit(
          [&](const auto& a) {
            using S = std::decay_t<decltype(a.gamma()(0, 0))>;
            if constexpr (!scalar_traits<S>::prime_field) {
              throw NotEnumerable("aut needs a prime field");
            } else {
              auto g = automorphisms(a, aut_cap);
              emit("order", std::to_string(g.order));
              if (aut_list)
                for (std::size_t i = 0; i < g.elements.size(); ++i)
                  emit("element" + std::to_string(i), fmt_mat<S>(g.elements[i]));
            }
          },
          any);
    } else if (*fam_cmd) {
      FieldSpec field = parse_field_arg(fam_field);
      auto build = [&](auto tag) -> std::string {
        using S = decltype(tag);
        Algebra<S> a(field, 0);
        if (fam_name == "abelian") {
          a = families::abelian<S>(fam_n, field);
        } else if (fam_name == "heisenberg") {
          a = families::heisenberg<S>(fam_n, field);
        } else if (fam_name == "a12") {
          a = families::a12<S>(field);
        } else if (fam_name == "a_xyz") {
          a = families::a_xyz<S>(fam_n, parse_cli_matrix<S>(field, fam_X),
                                 parse_cli_matrix<S>(field, fam_Y),
                                 parse_cli_matrix<S>(field, fam_Z), field);
        } else if (fam_name == "heis_abc") {
          a = families::heis_abc<S>(fam_n, parse_cli_matrix<S>(field, fam_A),
                                    parse_cli_matrix<S>(field, fam_B),
                                    parse_cli_matrix<S>(field, fam_C), field);
        } else if (fam_name == "v_f_v0") {
          a = families::v_f_v0<S>(parse_cli_matrix<S>(field, fam_f),
                                  parse_cli_vector<S>(field, fam_v0), field);
        } else if (fam_name == "kn_x_v0") {
          a = families::kn_x_v0<S>(parse_cli_matrix<S>(field, fam_X),
                                   parse_cli_vector<S>(field, fam_v0), field);
        } else if (fam_name == "a_theta") {
          a = families::a_theta<S>(parse_cli_matrix<S>(field, fam_theta), field);
        } else if (fam_name == "j_t") {
          a = families::j_t<S>(fam_n, fam_t, field);
        } else {
          throw BadParameters("unknown family '" + fam_name + "'");
        }
        return print_algebra(a);
      };
      std::string text = field.is_prime_field() ? build(Fp()) : build(Rat());
      if (!fam_out.empty()) {
        write_file(fam_out, text);
        emit("written", fam_out);
      } else {
        out << text;
      }
    } else if (*census_cmd) {
      FieldSpec field = parse_field_arg(census_field);
      if (!field.is_prime_field()) throw NotEnumerable("census needs a prime field");
      if (census_kind == "sym-homothety") {
        auto census = sym_homothety_census<Fp>(census_n, field);
        emit("class_count", std::to_string(census.class_count));
      } else if (census_kind == "codim1") {
        auto census = codim1_census<Fp>(census_fiber, field);
        emit("entries", std::to_string(census.entries.size()));
        emit("total_formula", std::to_string(census.total_formula));
        emit("total_orbit", std::to_string(census.total_orbit));
        emit("routes_agree", census.total_formula == census.total_orbit ? "true" : "false");
      } else {
        throw BadParameters("unknown census kind '" + census_kind + "'");
      }
    }
  } catch (const ParseError& e) {
    out << "error=" << e.what() << "\n";
    return {3, out.str()};
  } catch (const Error& e) {
    out << "error=" << e.what() << "\n";
    return {4, out.str()};
  }
  return {code, out.str()};
}

}  // namespace jja::cli
