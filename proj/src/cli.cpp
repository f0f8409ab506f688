// Copyright 2026 The hhsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hhsolve/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "hhsolve/errors.hpp"
#include "hhsolve/matrix_market.hpp"
#include "hhsolve/report.hpp"
#include "hhsolve/solver.hpp"
#include "hhsolve/verify.hpp"

namespace hhsolve::cli {
namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct SolveOptions {
  std::string matrix;
  std::string rhs;
  std::optional<double> tol;
  std::string strategy = "stable";
  std::string report;
  bool quiet = false;
};

struct GenOptions {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string kind = "uniform";
  std::string out_matrix;
  std::string out_rhs;
};

struct VerifyOptions {
  std::string matrix;
  std::string rhs;
  std::optional<double> tol;
  std::string strategy = "stable";
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t repeat = 1;
  std::uint64_t seed = 1;
  std::string strategy = "stable";
  std::string report;
};

SolverConfig make_config(const std::optional<double>& tol,
                         const std::string& strategy) {
  SolverConfig cfg;
  cfg.tol_singular = tol;
  cfg.sign_strategy = parse_sign_strategy(strategy);
  return cfg;
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const DenseMatrix a = io::read_matrix(o.matrix);
  const DenseVector b = io::read_vector(o.rhs);
  const SolverReport report = solve(a, b, make_config(o.tol, o.strategy));

  for (double v : report.x) out << fmt17(v) << '\n';
  if (!o.report.empty()) io::write_json(o.report, io::report_document(report));
  if (!o.quiet) {
    err << "n=" << report.n << " strategy=" << to_string(report.strategy)
        << " relative_residual=" << fmt6(report.relative_residual)
        << " min_row_norm=" << fmt6(report.min_row_norm)
        << " forward_sv=" << report.counter.forward_sv
        << " backward_sv=" << report.counter.backward_sv << '\n';
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  }
  return kOk;
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const auto [a, b] = gen_system(o.n, o.seed, parse_system_kind(o.kind));
  io::write_matrix(o.out_matrix, a);
  io::write_vector(o.out_rhs, b);
  out << "wrote " << o.n << "x" << o.n << ' ' << o.kind << " system (seed "
      << o.seed << ") to " << o.out_matrix << " and " << o.out_rhs << '\n';
  return kOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const DenseMatrix a = io::read_matrix(o.matrix);
  const DenseVector b = io::read_vector(o.rhs);
  const SolverConfig cfg = make_config(o.tol, o.strategy);
  const double tol = resolve_tolerance(a, cfg);

  const SolverReport hh = solve(a, b, cfg);
  const OracleResult ref = gauss_solve(a, b, tol);
  out << "householder residual: " << fmt6(hh.relative_residual) << '\n';
  if (ref.singular) {
    out << "elimination: singular\n";
    err << "solvers disagree: elimination reports a singular matrix\n";
    return kDisagreement;
  }
  const double diff = relative_error(hh.x, *ref.x);
  out << "elimination residual: " << fmt6(residual(a, *ref.x, b)) << '\n';
  out << "pivot ratio: " << fmt6(ref.cond_estimate) << '\n';
  out << "relative difference: " << fmt6(diff) << '\n';
  if (!(diff <= kVerifyTolerance)) {
    err << "solvers disagree beyond " << fmt6(kVerifyTolerance) << '\n';
    return kDisagreement;
  }
  return kOk;
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  if (o.repeat == 0) throw std::invalid_argument("--repeat must be at least 1");
  for (std::size_t n : o.sizes) {
    if (n < 3) throw std::invalid_argument("bench sizes must be >= 3");
  }
  SolverConfig cfg = make_config(std::nullopt, o.strategy);

  out << "# sv = scalar-vector products, the method's own work unit; it grows "
         "as O(n^2).\n"
      << "# wall time measures the real cost, O(n^3) floating-point "
         "operations.\n";
  char line[160];
  std::snprintf(line, sizeof line, "%6s %12s %12s %12s %12s %6s %14s %10s\n",
                "n", "forward_sv", "pred_fwd", "total_sv", "pred_total",
                "match", "wall_s(min)", "t/n^3(ns)");
  out << line;

  nlohmann::json rows = nlohmann::json::array();
  bool all_match = true;
  for (std::size_t n : o.sizes) {
    const auto [a, b] = gen_system(n, o.seed, SystemKind::Uniform);
    double best = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    OpCounter counter;
    for (std::size_t r = 0; r < o.repeat; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const SolverReport rep = solve(a, b, cfg);
      const double dt =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      best = std::min(best, dt);
      sum += dt;
      counter = rep.counter;
    }
    const std::size_t pf = predicted_forward_sv(n);
    const std::size_t pt = predicted_total_sv(n);
    const bool match = counter.forward_sv == pf && counter.total() == pt;
    all_match = all_match && match;
    const double n3 = std::pow(static_cast<double>(n), 3.0);

    std::snprintf(line, sizeof line,
                  "%6zu %12zu %12zu %12zu %12zu %6s %14.6e %10.4f\n", n,
                  counter.forward_sv, pf, counter.total(), pt,
                  match ? "yes" : "NO", best, best / n3 * 1e9);
    out << line;
    rows.push_back({{"n", n},
                    {"forward_sv", counter.forward_sv},
                    {"predicted_forward_sv", pf},
                    {"total_sv", counter.total()},
                    {"predicted_total_sv", pt},
                    {"match", match},
                    {"wall_seconds_min", best},
                    {"wall_seconds_mean", sum / static_cast<double>(o.repeat)}});
  }

  if (!o.report.empty()) {
    nlohmann::json doc;
    doc["schema_version"] = io::kReportSchemaVersion;
    doc["strategy"] = o.strategy;
    doc["seed"] = o.seed;
    doc["repeat"] = o.repeat;
    doc["sv_unit"] = "scalar-vector products (O(n^2) work metric)";
    doc["wall_time_note"] = "wall time reflects O(n^3) floating-point work";
    doc["rows"] = std::move(rows);
    io::write_json(o.report, doc);
  }
  if (!all_match) {
    err << "measured scalar-vector counts differ from the closed form\n";
    return kCountMismatch;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Dense linear solver based on Householder dimension reduction",
               "hhsolve"};
  app.require_subcommand(1);
  const std::vector<std::string> strategies{"paper", "stable"};

  SolveOptions so;
  auto* solve_cmd = app.add_subcommand("solve", "Solve A x = b");
  solve_cmd->add_option("--matrix", so.matrix, "Matrix Market file")->required();
  solve_cmd->add_option("--rhs", so.rhs, "Right-hand side vector file")->required();
  solve_cmd->add_option("--tol", so.tol, "Singularity tolerance (default 1e-12*n*max|a_ij|)");
  solve_cmd->add_option("--strategy", so.strategy, "Reflector sign strategy")
      ->check(CLI::IsMember(strategies));
  solve_cmd->add_option("--report", so.report, "Write a JSON report here");
  solve_cmd->add_flag("--quiet", so.quiet, "Suppress the summary on stderr");

  GenOptions go;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a test system");
  gen_cmd->add_option("--n", go.n, "Order of the system")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", go.seed, "RNG seed")->required();
  gen_cmd->add_option("--kind", go.kind, "uniform|duplicated_row|near_e1_rows|graded")
      ->check(CLI::IsMember({"uniform", "duplicated_row", "near_e1_rows", "graded"}));
  gen_cmd->add_option("--out-matrix", go.out_matrix, "Output Matrix Market file")->required();
  gen_cmd->add_option("--out-rhs", go.out_rhs, "Output vector file")->required();

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "Compare against Gaussian elimination");
  verify_cmd->add_option("--matrix", vo.matrix, "Matrix Market file")->required();
  verify_cmd->add_option("--rhs", vo.rhs, "Right-hand side vector file")->required();
  verify_cmd->add_option("--tol", vo.tol, "Singularity tolerance");
  verify_cmd->add_option("--strategy", vo.strategy, "Reflector sign strategy")
      ->check(CLI::IsMember(strategies));

  BenchOptions bo;
  auto* bench_cmd = app.add_subcommand("bench", "Check operation counts and time solves");
  bench_cmd->add_option("--sizes", bo.sizes, "Comma-separated orders, each >= 3")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--repeat", bo.repeat, "Solves per size");
  bench_cmd->add_option("--seed", bo.seed, "RNG seed for the uniform systems");
  bench_cmd->add_option("--strategy", bo.strategy, "Reflector sign strategy")
      ->check(CLI::IsMember(strategies));
  bench_cmd->add_option("--report", bo.report, "Write a JSON report here");

  std::vector<std::string> argv_store{"hhsolve"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) {
      err << app.get_subcommands().front()->help();
    } else {
      err << app.help();
    }
    return kFailure;
  }

  try {
    if (*solve_cmd) return cmd_solve(so, out, err);
    if (*gen_cmd) return cmd_gen(go, out);
    if (*verify_cmd) return cmd_verify(vo, out, err);
    if (*bench_cmd) return cmd_bench(bo, out, err);
  } catch (const SingularOrIllConditioned& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const Degenerate2x2& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace hhsolve::cli
