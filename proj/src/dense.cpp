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

#include "hhsolve/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hhsolve/errors.hpp"

namespace hhsolve {
namespace {

void require_nonempty(std::size_t n, const char* what) {
  if (n == 0) throw DimensionMismatch(std::string(what) + " must be non-empty");
}

void require_same_size(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionMismatch(std::string(op) + ": length " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

}  // namespace

DenseVector::DenseVector(std::size_t len, double fill) : data_(len, fill) {
  require_nonempty(len, "vector");
}

DenseVector::DenseVector(std::initializer_list<double> values)
    : data_(values) {
  require_nonempty(data_.size(), "vector");
}

DenseVector::DenseVector(std::vector<double> values) : data_(std::move(values)) {
  require_nonempty(data_.size(), "vector");
}

DenseVector DenseVector::checked(std::vector<double> values) {
  if (!all_finite(values)) throw NonFiniteInput("vector has non-finite entries");
  return DenseVector(std::move(values));
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  require_nonempty(rows, "matrix rows");
  require_nonempty(cols, "matrix cols");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  require_nonempty(rows, "matrix rows");
  require_nonempty(cols, "matrix cols");
  require_same_size(data_.size(), rows * cols, "matrix data");
}

DenseMatrix::DenseMatrix(
    std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  require_nonempty(rows_, "matrix rows");
  require_nonempty(cols_, "matrix cols");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require_same_size(r.size(), cols_, "matrix row");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

DenseMatrix DenseMatrix::checked(std::size_t rows, std::size_t cols,
                                 std::vector<double> row_major) {
  if (!all_finite(row_major)) throw NonFiniteInput("matrix has non-finite entries");
  return DenseMatrix(rows, cols, std::move(row_major));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) {
    if (std::isnan(x)) return x;
    m = std::max(m, std::abs(x));
  }
  return m;
}

double norm2(std::span<const double> v) {
  const double scale = max_abs(v);
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double sum = 0.0;
  for (double x : v) {
    const double t = x / scale;
    sum += t * t;
  }
  return scale * std::sqrt(sum);
}

double dot(const DenseVector& a, const DenseVector& b) {
  require_same_size(a.size(), b.size(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

DenseVector axpy(double alpha, const DenseVector& x, const DenseVector& y) {
  require_same_size(x.size(), y.size(), "axpy");
  DenseVector out = y;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += alpha * x[i];
  return out;
}

DenseVector matvec(const DenseMatrix& m, const DenseVector& v) {
  require_same_size(m.cols(), v.size(), "matvec");
  DenseVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row_span(i);
    double s = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * v[j];
    out[i] = s;
  }
  return out;
}

DenseVector row(const DenseMatrix& m, std::size_t i) {
  if (i >= m.rows()) {
    throw IndexOutOfRange("row " + std::to_string(i) + " of " +
                          std::to_string(m.rows()));
  }
  const auto r = m.row_span(i);
  return DenseVector(std::vector<double>(r.begin(), r.end()));
}

DenseMatrix minor_11(const DenseMatrix& m) {
  if (m.rows() < 2 || m.cols() < 2) {
    throw DimensionMismatch("minor_11 needs at least a 2x2 matrix");
  }
  DenseMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 1; i < m.rows(); ++i) {
    const auto src = m.row_span(i).subspan(1);
    std::copy(src.begin(), src.end(), out.row_span(i - 1).begin());
  }
  return out;
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

}  // namespace hhsolve
