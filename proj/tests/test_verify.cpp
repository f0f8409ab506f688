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

#include <gtest/gtest.h>

#include <cmath>

#include "hhsolve/errors.hpp"
#include "hhsolve/verify.hpp"

using namespace hhsolve;

TEST(SplitMix64Test, ReferenceSequence) {
  SplitMix64 rng(0);
  EXPECT_EQ(0xE220A8397B1DCDAFULL, rng.next());
  EXPECT_EQ(0x6E789E6AA1B965F4ULL, rng.next());
  EXPECT_EQ(0x06C45D188009454FULL, rng.next());
}

TEST(SplitMix64Test, UniformRange) {
  SplitMix64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform(-1.0, 1.0);
    ASSERT_GE(u, -1.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(GaussSolveTest, Examples) {
  const OracleResult id = gauss_solve(DenseMatrix::identity(3), DenseVector{1, 2, 3}, 1e-12);
  ASSERT_FALSE(id.singular);
  EXPECT_EQ((DenseVector{1, 2, 3}), *id.x);
  EXPECT_EQ(1.0, id.cond_estimate);

  const OracleResult rank1 = gauss_solve(DenseMatrix{{1, 2}, {2, 4}}, DenseVector{1, 1}, 1e-12);
  EXPECT_TRUE(rank1.singular);
  EXPECT_FALSE(rank1.x.has_value());

  const OracleResult perm = gauss_solve(DenseMatrix{{0, 1}, {1, 0}}, DenseVector{7, 8}, 1e-12);
  ASSERT_FALSE(perm.singular);
  EXPECT_EQ((DenseVector{8, 7}), *perm.x);
}

TEST(GaussSolveTest, IdentitySelfCheck) {
  for (std::size_t n = 1; n <= 20; ++n) {
    DenseVector b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = std::sin(static_cast<double>(i) + 0.5);
    const OracleResult r = gauss_solve(DenseMatrix::identity(n), b, 1e-12);
    ASSERT_FALSE(r.singular);
    EXPECT_EQ(b, *r.x);
  }
}

TEST(GaussSolveTest, KnownThreeByThree) {
  // 2x + y - z = 8, -3x - y + 2z = -11, -2x + y + 2z = -3  =>  (2, 3, -1)
  const DenseMatrix a{{2, 1, -1}, {-3, -1, 2}, {-2, 1, 2}};
  const OracleResult r = gauss_solve(a, DenseVector{8, -11, -3}, 1e-12);
  ASSERT_FALSE(r.singular);
  EXPECT_NEAR(2.0, (*r.x)[0], 1e-14);
  EXPECT_NEAR(3.0, (*r.x)[1], 1e-14);
  EXPECT_NEAR(-1.0, (*r.x)[2], 1e-14);
}

TEST(GaussSolveTest, DimensionMismatch) {
  EXPECT_THROW(gauss_solve(DenseMatrix(2, 3), DenseVector(2), 1e-12), DimensionMismatch);
  EXPECT_THROW(gauss_solve(DenseMatrix::identity(2), DenseVector(3), 1e-12), DimensionMismatch);
}

TEST(GenSystemTest, Deterministic) {
  for (auto kind : {SystemKind::Uniform, SystemKind::DuplicatedRow,
                    SystemKind::NearE1Rows, SystemKind::Graded}) {
    const auto first = gen_system(7, 123, kind);
    const auto second = gen_system(7, 123, kind);
    EXPECT_EQ(first.first, second.first);
    EXPECT_EQ(first.second, second.second);
  }
  EXPECT_NE(gen_system(7, 123, SystemKind::Uniform).first,
            gen_system(7, 124, SystemKind::Uniform).first);
}

TEST(GenSystemTest, UniformRange) {
  const auto [a, b] = gen_system(30, 9, SystemKind::Uniform);
  EXPECT_LE(max_abs(a.values()), 1.0);
  EXPECT_LE(max_abs(b.values()), 1.0);
}

TEST(GenSystemTest, DuplicatedRow) {
  const auto [a, b] = gen_system(3, 42, SystemKind::DuplicatedRow);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(a(0, j), a(1, j));
  EXPECT_NO_THROW(gen_system(1, 42, SystemKind::DuplicatedRow));
}

TEST(GenSystemTest, NearE1Rows) {
  const auto [a, b] = gen_system(4, 7, SystemKind::NearE1Rows);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_GT(a(i, 0), 0.0);
    double tail = 0.0;
    for (std::size_t j = 1; j < 4; ++j) tail += a(i, j) * a(i, j);
    EXPECT_LE(std::sqrt(tail), 1e-9);
  }
}

TEST(GenSystemTest, Graded) {
  const auto [u, ub] = gen_system(5, 3, SystemKind::Uniform);
  const auto [g, gb] = gen_system(5, 3, SystemKind::Graded);
  EXPECT_EQ(ub, gb);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      EXPECT_DOUBLE_EQ(u(i, j) * std::pow(10.0, -static_cast<double>(i + 1)), g(i, j));
}

TEST(GenSystemTest, KindNames) {
  EXPECT_EQ(SystemKind::NearE1Rows, parse_system_kind("near_e1_rows"));
  EXPECT_EQ("duplicated_row", to_string(SystemKind::DuplicatedRow));
  EXPECT_THROW(parse_system_kind("hilbert"), std::invalid_argument);
}

TEST(ResidualTest, Examples) {
  const DenseMatrix i2 = DenseMatrix::identity(2);
  EXPECT_EQ(0.0, residual(i2, DenseVector{1, 2}, DenseVector{1, 2}));
  EXPECT_NEAR(1.0 / std::sqrt(10.0), residual(i2, DenseVector{1, 2}, DenseVector{1, 3}), 1e-16);
  // b = 0 falls back to |A x|; 0/0 is 0.
  EXPECT_EQ(1.0, residual(i2, DenseVector{3, 4}, DenseVector{0, 0}));
  EXPECT_EQ(0.0, residual(i2, DenseVector{0, 0}, DenseVector{0, 0}));
  EXPECT_THROW(residual(i2, DenseVector{1}, DenseVector{1, 2}), DimensionMismatch);
}
