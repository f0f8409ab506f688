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

#ifndef HHSOLVE_REFLECTOR_HPP_
#define HHSOLVE_REFLECTOR_HPP_

#include <cstddef>
#include <limits>
#include <string_view>

#include "hhsolve/dense.hpp"

namespace hhsolve {

/// Sign of the reflection target k*e1.
///
/// PaperPositive always maps a row onto +|a|*e1, which loses precision when
/// the row already points close to +e1. StableSignFlip maps onto
/// -sign(a[0])*|a|*e1 so the first entry of a - k*e1 never cancels.
enum class SignStrategy { PaperPositive, StableSignFlip };

std::string_view to_string(SignStrategy s);
/// Accepts "paper" and "stable".
SignStrategy parse_sign_strategy(std::string_view name);

/// Scalar-vector product tally, split by solver phase.
struct OpCounter {
  std::size_t forward_sv = 0;
  std::size_t backward_sv = 0;

  std::size_t total() const { return forward_sv + backward_sv; }
};

/// Householder reflector H = I - 2 v v^T, stored as the unit vector v and the
/// constant k for which a*H = k*e1 holds on the source row a.
///
/// When the source row is already a multiple of e1, `identity` is set, H is
/// the identity and `v` is unused.
struct Reflector {
  DenseVector v;
  double k = 0.0;
  bool identity = false;

  std::size_t dim() const { return v.size(); }
};

// Relative size of the off-axis part below which a row counts as k*e1.
inline constexpr double kAxisTolerance = std::numeric_limits<double>::epsilon();

/// Builds the reflector that sends row `a` onto k*e1.
///
/// Throws ZeroNorm when norm2(a) <= tol. The reflector degenerates to the
/// identity (with k = a[0]) when the entries of `a` after the first have a
/// combined norm <= kAxisTolerance * norm2(a); a*I = a is then k*e1 to
/// working precision.
Reflector build_reflector(const DenseVector& a, SignStrategy strategy,
                          double tol);

/// a * H for a row vector a.
DenseVector reflect_row(const Reflector& r, const DenseVector& a);

/// H * z for a column vector z. Same arithmetic as reflect_row since H is
/// symmetric.
DenseVector reflect_col(const Reflector& r, const DenseVector& z);

/// Whether apply_right may overwrite the first row of the product with its
/// known value (k, 0, ..., 0). Only valid when the reflector was built from
/// the first row of the matrix being transformed.
enum class FirstRow { Compute, Pinned };

/// D = C*H computed as the rank-one update C - 2 (C v) v^T.
///
/// Each row that is actually updated adds one scalar-vector product to
/// `counter->forward_sv`; a pinned first row is free.
DenseMatrix apply_right(const DenseMatrix& c, const Reflector& r,
                        OpCounter* counter = nullptr,
                        FirstRow first_row = FirstRow::Compute);

}  // namespace hhsolve

#endif  // HHSOLVE_REFLECTOR_HPP_
