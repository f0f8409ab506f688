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

#ifndef HHSOLVE_MATRIX_MARKET_HPP_
#define HHSOLVE_MATRIX_MARKET_HPP_

#include <filesystem>
#include <iosfwd>

#include "hhsolve/dense.hpp"

namespace hhsolve::io {

// Reads a Matrix Market file with header
//   %%MatrixMarket matrix array real general        (column-major dense)
//   %%MatrixMarket matrix coordinate real general   (1-based triplets)
// The `integer` field is accepted as well. Coordinate files are densified;
// repeated (i, j) entries are summed.
//
// Errors: IoError, ParseError (with line number), NonFiniteValue,
// HeaderUnsupported.
DenseMatrix read_matrix(std::istream& in);
DenseMatrix read_matrix(const std::filesystem::path& path);

// Plain vector file: the first non-comment line holds the length, followed by
// one value per line. Lines starting with '%' and blank lines are skipped.
DenseVector read_vector(std::istream& in);
DenseVector read_vector(const std::filesystem::path& path);

// Writers emit 17 significant digits, so reading back is bit-exact. Matrices
// are always written in the dense `array` variant.
void write_matrix(std::ostream& out, const DenseMatrix& m);
void write_matrix(const std::filesystem::path& path, const DenseMatrix& m);
void write_vector(std::ostream& out, const DenseVector& v);
void write_vector(const std::filesystem::path& path, const DenseVector& v);

}  // namespace hhsolve::io

#endif  // HHSOLVE_MATRIX_MARKET_HPP_
