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

#include "hhsolve/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hhsolve/errors.hpp"

namespace hhsolve {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
  return lo + (hi - lo) * next_unit();
}

OracleResult gauss_solve(const DenseMatrix& a, const DenseVector& b,
                         double tol) {
  const std::size_t n = a.rows();
  if (!a.is_square() || b.size() != n) {
    throw DimensionMismatch("gauss_solve: system is not square or rhs does not conform");
  }

  // Augmented working copy, one row per equation.
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n] = b[i];
  }

  OracleResult result;
  double max_pivot = 0.0;
  double min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (std::abs(m[i][col]) > std::abs(m[p][col])) p = i;
    }
    const double pivot = std::abs(m[p][col]);
    max_pivot = std::max(max_pivot, pivot);
    min_pivot = std::min(min_pivot, pivot);
    if (pivot <= tol) {
      result.singular = true;
      result.cond_estimate = std::numeric_limits<double>::infinity();
      return result;
    }
    std::swap(m[p], m[col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      const double f = m[i][col] / m[col][col];
      if (f == 0.0) continue;
      for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }

  DenseVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = m[i][n];
    for (std::size_t j = i + 1; j < n; ++j) s -= m[i][j] * x[j];
    x[i] = s / m[i][i];
  }
  result.x = std::move(x);
  result.cond_estimate = max_pivot / min_pivot;
  return result;
}

std::string_view to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::Uniform:
      return "uniform";
    case SystemKind::DuplicatedRow:
      return "duplicated_row";
    case SystemKind::NearE1Rows:
      return "near_e1_rows";
    case SystemKind::Graded:
      return "graded";
  }
  return "unknown";
}

SystemKind parse_system_kind(std::string_view name) {
  for (auto k : {SystemKind::Uniform, SystemKind::DuplicatedRow,
                 SystemKind::NearE1Rows, SystemKind::Graded}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown system kind '" + std::string(name) + "'");
}

std::pair<DenseMatrix, DenseVector> gen_system(std::size_t n,
                                               std::uint64_t seed,
                                               SystemKind kind) {
  SplitMix64 rng(seed);
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (double& v : a.row_span(i)) v = rng.uniform(-1.0, 1.0);
  }
  DenseVector b(n);
  for (double& v : b.values()) v = rng.uniform(-1.0, 1.0);

  switch (kind) {
    case SystemKind::Uniform:
      break;
    case SystemKind::DuplicatedRow:
      if (n >= 2) {
        const auto src = a.row_span(0);
        std::copy(src.begin(), src.end(), a.row_span(1).begin());
      }
      break;
    case SystemKind::NearE1Rows:
      for (std::size_t i = 0; i < n; ++i) {
        auto r = a.row_span(i);
        const double len = norm2(r);
        for (double& v : r) v = kNearE1Noise * rng.uniform(-1.0, 1.0);
        r[0] += len;
      }
      break;
    case SystemKind::Graded:
      for (std::size_t i = 0; i < n; ++i) {
        const double scale = std::pow(10.0, -static_cast<double>(i + 1));
        for (double& v : a.row_span(i)) v *= scale;
      }
      break;
  }
  return {std::move(a), std::move(b)};
}

double residual(const DenseMatrix& a, const DenseVector& x,
                const DenseVector& b) {
  if (a.cols() != x.size() || a.rows() != b.size()) {
    throw DimensionMismatch("residual: dimensions do not conform");
  }
  const DenseVector ax = matvec(a, x);
  const double num = norm2(axpy(-1.0, b, ax));
  double den = norm2(b);
  if (den == 0.0) den = norm2(ax);
  if (den == 0.0) return 0.0;  // A x = b = 0
  return num / den;
}

double relative_error(const DenseVector& x, const DenseVector& reference) {
  const double diff = norm2(axpy(-1.0, reference, x));
  const double den = norm2(reference);
  return den == 0.0 ? diff : diff / den;
}

}  // namespace hhsolve
