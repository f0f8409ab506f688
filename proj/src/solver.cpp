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

#include "hhsolve/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hhsolve/errors.hpp"
#include "hhsolve/verify.hpp"

namespace hhsolve {
namespace {

void validate_system(const DenseMatrix& a, const DenseVector& b) {
  if (!a.is_square()) {
    throw DimensionMismatch("system matrix is " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()) + ", not square");
  }
  if (b.size() != a.rows()) {
    throw DimensionMismatch("right-hand side has length " +
                            std::to_string(b.size()) + ", expected " +
                            std::to_string(a.rows()));
  }
  if (!all_finite(a.values())) throw NonFiniteInput("matrix has non-finite entries");
  if (!all_finite(b.values())) {
    throw NonFiniteInput("right-hand side has non-finite entries");
  }
}

}  // namespace

double default_tolerance(const DenseMatrix& a) {
  return 1e-12 * static_cast<double>(a.rows()) * max_abs(a.values());
}

double resolve_tolerance(const DenseMatrix& a, const SolverConfig& cfg) {
  if (!cfg.tol_singular) return default_tolerance(a);
  if (!(*cfg.tol_singular > 0.0) || !std::isfinite(*cfg.tol_singular)) {
    throw std::invalid_argument("singularity tolerance must be positive");
  }
  return *cfg.tol_singular;
}

ForwardResult forward_reduce(const DenseMatrix& a, const DenseVector& b,
                             const SolverConfig& cfg) {
  validate_system(a, b);
  const double tol = resolve_tolerance(a, cfg);

  ForwardResult out;
  ReductionStack& stack = out.stack;
  stack.n = a.rows();
  stack.tol_singular = tol;
  stack.min_row_norm = std::numeric_limits<double>::infinity();
  OpCounter* counter = cfg.count_ops ? &out.counter : nullptr;

  auto check_leading_row = [&](const DenseMatrix& c, std::size_t step) {
    const double rn = norm2(c.row_span(0));
    stack.min_row_norm = std::min(stack.min_row_norm, rn);
    if (rn <= tol) throw SingularOrIllConditioned(step, rn, tol);
  };

  DenseMatrix c = a;
  DenseVector rhs = b;
  std::size_t step = 1;
  while (c.rows() > 2) {
    const std::size_t m = c.rows();
    check_leading_row(c, step);
    Reflector h = build_reflector(row(c, 0), cfg.sign_strategy, tol);
    const DenseMatrix d = apply_right(c, h, counter, FirstRow::Pinned);

    const double y_first = rhs[0] / h.k;
    DenseVector next(m - 1);
    for (std::size_t j = 1; j < m; ++j) next[j - 1] = rhs[j] - d(j, 0) * y_first;

    stack.steps.push_back(ReductionStep{std::move(h), y_first, m});
    c = minor_11(d);
    rhs = std::move(next);
    ++step;
  }

  check_leading_row(c, step);
  stack.terminal = solve_2x2(c, rhs, tol);
  return out;
}

DenseVector solve_2x2(const DenseMatrix& m, const DenseVector& b, double tol) {
  if (!m.is_square() || m.rows() > 2 || b.size() != m.rows()) {
    throw DimensionMismatch("solve_2x2 expects a 1x1 or 2x2 system");
  }
  if (m.rows() == 1) {
    const double det = m(0, 0);
    if (std::abs(det) <= tol * tol) throw Degenerate2x2(det);
    return DenseVector{b[0] / det};
  }
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (std::abs(det) <= tol * tol) throw Degenerate2x2(det);
  return DenseVector{(b[0] * m(1, 1) - m(0, 1) * b[1]) / det,
                     (m(0, 0) * b[1] - m(1, 0) * b[0]) / det};
}

DenseVector back_substitute(const ReductionStack& stack, OpCounter* counter) {
  std::vector<double> z(stack.terminal.begin(), stack.terminal.end());
  if (counter) counter->backward_sv += z.size();

  for (auto it = stack.steps.rbegin(); it != stack.steps.rend(); ++it) {
    if (it->reflector.dim() != z.size() + 1) {
      throw DimensionMismatch("reduction stack is inconsistent at order " +
                              std::to_string(it->dim));
    }
    z.insert(z.begin(), it->y_first);
    DenseVector x = reflect_col(it->reflector, DenseVector(std::move(z)));
    z.assign(x.begin(), x.end());
    if (counter) counter->backward_sv += 1;
  }
  return DenseVector(std::move(z));
}

std::size_t predicted_forward_sv(std::size_t n) {
  if (n < 3) throw std::invalid_argument("operation counts are defined for n >= 3");
  return (n * n - n - 2) / 2;
}

std::size_t predicted_total_sv(std::size_t n) {
  if (n < 3) throw std::invalid_argument("operation counts are defined for n >= 3");
  return (n * n + n - 2) / 2;
}

SolverReport solve(const DenseMatrix& a, const DenseVector& b,
                   const SolverConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();

  ForwardResult fwd = forward_reduce(a, b, cfg);
  SolverReport report;
  report.counter = fwd.counter;
  report.x = back_substitute(fwd.stack, cfg.count_ops ? &report.counter : nullptr);

  report.n = a.rows();
  report.strategy = cfg.sign_strategy;
  report.tol_singular = fwd.stack.tol_singular;
  report.min_row_norm = fwd.stack.min_row_norm;
  report.relative_residual = residual(a, report.x, b);
  if (report.n >= 3) {
    report.predicted_forward_sv = predicted_forward_sv(report.n);
    report.predicted_total_sv = predicted_total_sv(report.n);
  }
  if (!all_finite(report.x.values())) {
    report.warnings.push_back("solution contains non-finite values");
  }
  if (!(report.relative_residual <= kResidualWarningThreshold)) {
    report.warnings.push_back("relative residual exceeds 1e-6");
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace hhsolve
