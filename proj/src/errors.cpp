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

#include "hhsolve/errors.hpp"

#include <cstdio>

namespace hhsolve {
namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

ZeroNorm::ZeroNorm(double norm)
    : Error("reflector source row has zero norm (" + format_double(norm) + ")"),
      norm_(norm) {}

SingularOrIllConditioned::SingularOrIllConditioned(std::size_t step,
                                                   double row_norm, double tol)
    : Error("matrix is singular or ill-conditioned: leading row norm " +
            format_double(row_norm) + " <= tolerance " + format_double(tol) +
            " at reduction step " + std::to_string(step)),
      step_(step),
      row_norm_(row_norm),
      tol_(tol) {}

Degenerate2x2::Degenerate2x2(double det)
    : Error("terminal system is degenerate (determinant " + format_double(det) +
            ")"),
      det_(det) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

NonFiniteValue::NonFiniteValue(std::size_t line)
    : ParseError(line, "non-finite value") {}

HeaderUnsupported::HeaderUnsupported(const std::string& header)
    : Error("unsupported Matrix Market header: " + header) {}

}  // namespace hhsolve
