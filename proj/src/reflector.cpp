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

#include "hhsolve/reflector.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hhsolve/errors.hpp"

namespace hhsolve {

std::string_view to_string(SignStrategy s) {
  switch (s) {
    case SignStrategy::PaperPositive:
      return "paper";
    case SignStrategy::StableSignFlip:
      return "stable";
  }
  return "unknown";
}

SignStrategy parse_sign_strategy(std::string_view name) {
  if (name == "paper") return SignStrategy::PaperPositive;
  if (name == "stable") return SignStrategy::StableSignFlip;
  throw std::invalid_argument("unknown sign strategy '" + std::string(name) +
                              "' (expected paper|stable)");
}

Reflector build_reflector(const DenseVector& a, SignStrategy strategy,
                          double tol) {
  const double norm = norm2(a);
  if (!(norm > tol)) throw ZeroNorm(norm);

  const double tail = a.size() > 1 ? norm2(a.values().subspan(1)) : 0.0;
  if (tail <= kAxisTolerance * norm) {
    // Already on the e1 axis; reflecting would only flip signs.
    DenseVector e1(a.size());
    e1[0] = 1.0;
    return Reflector{std::move(e1), a[0], true};
  }

  double k = norm;
  if (strategy == SignStrategy::StableSignFlip) k = a[0] >= 0.0 ? -norm : norm;

  // v = (a - k e1) / |a - k e1|. Under PaperPositive the first entry
  // cancels as a[0] approaches |a|.
  DenseVector v = a;
  v[0] -= k;
  const double len = norm2(v);
  for (double& x : v.values()) x /= len;
  return Reflector{std::move(v), k, false};
}

DenseVector reflect_row(const Reflector& r, const DenseVector& a) {
  if (a.size() != r.dim()) {
    throw DimensionMismatch("reflect: vector length " + std::to_string(a.size()) +
                            " vs reflector dimension " + std::to_string(r.dim()));
  }
  if (r.identity) return a;
  return axpy(-2.0 * dot(a, r.v), r.v, a);
}

DenseVector reflect_col(const Reflector& r, const DenseVector& z) {
  return reflect_row(r, z);
}

DenseMatrix apply_right(const DenseMatrix& c, const Reflector& r,
                        OpCounter* counter, FirstRow first_row) {
  if (c.cols() != r.dim()) {
    throw DimensionMismatch("apply_right: matrix has " + std::to_string(c.cols()) +
                            " columns, reflector dimension " +
                            std::to_string(r.dim()));
  }
  DenseMatrix d = c;
  const std::size_t first = first_row == FirstRow::Pinned ? 1 : 0;
  if (!r.identity) {
    const auto v = r.v.values();
    for (std::size_t i = first; i < d.rows(); ++i) {
      auto out = d.row_span(i);
      double w = 0.0;
      for (std::size_t j = 0; j < v.size(); ++j) w += out[j] * v[j];
      const double scale = 2.0 * w;
      for (std::size_t j = 0; j < v.size(); ++j) out[j] -= scale * v[j];
    }
  }
  if (first_row == FirstRow::Pinned) {
    auto head = d.row_span(0);
    std::fill(head.begin(), head.end(), 0.0);
    head[0] = r.k;
  }
  if (counter) counter->forward_sv += d.rows() - first;
  return d;
}

}  // namespace hhsolve
