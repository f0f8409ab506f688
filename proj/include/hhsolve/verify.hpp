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

#ifndef HHSOLVE_VERIFY_HPP_
#define HHSOLVE_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "hhsolve/dense.hpp"

// Reference solver and test-system generation. Nothing here shares code with
// the reflector-based solver beyond the dense value types.
namespace hhsolve {

/// SplitMix64 (Steele, Lea and Flood 2014). State advances by
/// 0x9E3779B97F4A7C15; output mixing uses the multipliers
/// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB with shifts 30, 27, 31.
/// Spelled out here so generated systems are reproducible on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Top 53 bits scaled into [0, 1).
  double next_unit();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

struct OracleResult {
  std::optional<DenseVector> x;  // empty when singular
  bool singular = false;
  double cond_estimate = 0.0;    // max|pivot| / min|pivot|
};

/// Gaussian elimination with partial pivoting. A pivot of magnitude <= tol
/// marks the system singular.
OracleResult gauss_solve(const DenseMatrix& a, const DenseVector& b,
                         double tol);

enum class SystemKind { Uniform, DuplicatedRow, NearE1Rows, Graded };

std::string_view to_string(SystemKind kind);
/// Accepts uniform, duplicated_row, near_e1_rows and graded.
SystemKind parse_system_kind(std::string_view name);

// Noise amplitude for NearE1Rows.
inline constexpr double kNearE1Noise = 1e-10;

/// Deterministic n x n test system. Entries of A (row-major) are drawn first,
/// then b, all uniform in [-1, 1):
///   Uniform        as drawn
///   DuplicatedRow  row 1 overwritten by row 0
///   NearE1Rows     row i replaced by |row i| e1 + 1e-10 * noise
///   Graded         row i scaled by 10^-(i+1)
std::pair<DenseMatrix, DenseVector> gen_system(std::size_t n,
                                               std::uint64_t seed,
                                               SystemKind kind);

/// |A x - b| / |b|, falling back to |A x| when b = 0 (0/0 is 0).
double residual(const DenseMatrix& a, const DenseVector& x,
                const DenseVector& b);

/// |x - reference| / |reference| (absolute difference when reference = 0).
double relative_error(const DenseVector& x, const DenseVector& reference);

}  // namespace hhsolve

#endif  // HHSOLVE_VERIFY_HPP_
