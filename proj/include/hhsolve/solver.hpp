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

#ifndef HHSOLVE_SOLVER_HPP_
#define HHSOLVE_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hhsolve/dense.hpp"
#include "hhsolve/reflector.hpp"

namespace hhsolve {

// Relative residual above which a solve report carries a warning.
inline constexpr double kResidualWarningThreshold = 1e-6;

struct SolverConfig {
  /// Singularity tolerance on leading-row norms. Unset means
  /// default_tolerance(A).
  std::optional<double> tol_singular;
  SignStrategy sign_strategy = SignStrategy::StableSignFlip;
  bool count_ops = true;
};

/// 1e-12 * n * max|a_ij|.
double default_tolerance(const DenseMatrix& a);

/// The tolerance a solve of `a` under `cfg` will use. Throws
/// std::invalid_argument for a non-positive explicit tolerance.
double resolve_tolerance(const DenseMatrix& a, const SolverConfig& cfg);

/// One forward step: the reflector built from the leading row of the current
/// order-`dim` system and the unknown it determines.
struct ReductionStep {
  Reflector reflector;
  double y_first = 0.0;
  std::size_t dim = 0;
};

/// Everything the forward phase produces. `steps` is empty for n <= 2;
/// `terminal` solves the final order-min(n, 2) system directly.
struct ReductionStack {
  std::size_t n = 0;
  std::vector<ReductionStep> steps;
  DenseVector terminal{0.0};
  double min_row_norm = 0.0;
  double tol_singular = 0.0;
};

struct ForwardResult {
  ReductionStack stack;
  OpCounter counter;
};

/// Reduces A x = b one order at a time until a 2x2 (or 1x1) system remains,
/// then solves that system.
///
/// At every order m the leading row of the current matrix C is mapped onto
/// k*e1 by a reflector H, giving D = C H with D's first row (k, 0, ..., 0).
/// The first unknown of H x = y is then y_1 = b_1 / k, its contribution
/// D[j][0] * y_1 is moved to the right-hand side, and the lower-right minor
/// of D becomes the next system.
///
/// Throws SingularOrIllConditioned when a leading row (including that of the
/// terminal system) has norm <= tolerance, Degenerate2x2 when the terminal
/// determinant is too small, DimensionMismatch and NonFiniteInput for bad
/// inputs.
ForwardResult forward_reduce(const DenseMatrix& a, const DenseVector& b,
                             const SolverConfig& cfg = {});

/// Closed-form solve of a 1x1 or 2x2 system. Degenerate2x2 when
/// |det| <= tol^2.
DenseVector solve_2x2(const DenseMatrix& m, const DenseVector& b, double tol);

/// Recovers x from the reduction stack: starting from the terminal solution,
/// each step (last to first) prepends its y_first and applies its reflector.
/// Adds one scalar-vector product per reflector and one per terminal unknown
/// to `counter->backward_sv`.
DenseVector back_substitute(const ReductionStack& stack,
                            OpCounter* counter = nullptr);

/// Forward-phase count of scalar-vector products, (n^2 - n - 2) / 2.
/// Requires n >= 3.
std::size_t predicted_forward_sv(std::size_t n);
/// Whole-solve count, (n^2 + n - 2) / 2. Requires n >= 3.
std::size_t predicted_total_sv(std::size_t n);

struct SolverReport {
  DenseVector x{0.0};
  std::size_t n = 0;
  SignStrategy strategy = SignStrategy::StableSignFlip;
  double tol_singular = 0.0;
  double relative_residual = 0.0;
  double min_row_norm = 0.0;
  OpCounter counter;
  std::optional<std::size_t> predicted_forward_sv;
  std::optional<std::size_t> predicted_total_sv;
  std::vector<std::string> warnings;
  double elapsed_seconds = 0.0;
};

/// forward_reduce + back_substitute, with residual and count diagnostics.
SolverReport solve(const DenseMatrix& a, const DenseVector& b,
                   const SolverConfig& cfg = {});

}  // namespace hhsolve

#endif  // HHSOLVE_SOLVER_HPP_
