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

#ifndef HHSOLVE_DENSE_HPP_
#define HHSOLVE_DENSE_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hhsolve {

/// Fixed-length vector of doubles. Never empty.
class DenseVector {
 public:
  explicit DenseVector(std::size_t len, double fill = 0.0);
  DenseVector(std::initializer_list<double> values);
  explicit DenseVector(std::vector<double> values);

  /// Construction from untrusted data: also rejects NaN and infinity.
  static DenseVector checked(std::vector<double> values);

  std::size_t size() const { return data_.size(); }
  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }

  std::span<const double> values() const { return data_; }
  std::span<double> values() { return data_; }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  bool operator==(const DenseVector&) const = default;

 private:
  std::vector<double> data_;
};

/// Row-major rows x cols matrix of doubles. Both dimensions are at least 1.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);
  /// Nested-list construction, e.g. `DenseMatrix{{1, 2}, {3, 4}}`.
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix checked(std::size_t rows, std::size_t cols,
                             std::vector<double> row_major);
  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  std::span<const double> row_span(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * cols_, cols_);
  }
  std::span<double> row_span(std::size_t i) {
    return std::span<double>(data_).subspan(i * cols_, cols_);
  }
  std::span<const double> values() const { return data_; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

// Euclidean norm with max-abs scaling; finite for any finite input.
double norm2(std::span<const double> v);
inline double norm2(const DenseVector& v) { return norm2(v.values()); }

double max_abs(std::span<const double> v);

double dot(const DenseVector& a, const DenseVector& b);

// y + alpha * x
DenseVector axpy(double alpha, const DenseVector& x, const DenseVector& y);

DenseVector matvec(const DenseMatrix& m, const DenseVector& v);

// Copy of row i.
DenseVector row(const DenseMatrix& m, std::size_t i);

// Submatrix left after deleting the first row and first column.
DenseMatrix minor_11(const DenseMatrix& m);

bool all_finite(std::span<const double> v);

}  // namespace hhsolve

#endif  // HHSOLVE_DENSE_HPP_
