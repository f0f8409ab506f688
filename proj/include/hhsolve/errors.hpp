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

#ifndef HHSOLVE_ERRORS_HPP_
#define HHSOLVE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hhsolve {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

// Reflector source row has (numerically) zero length.
class ZeroNorm : public Error {
 public:
  explicit ZeroNorm(double norm);
  double norm() const { return norm_; }

 private:
  double norm_;
};

// Raised by the forward reduction when the leading row of the current
// system has a 2-norm at or below the singularity tolerance. `step` is
// 1-based: step s works on the system of order n - s + 1.
class SingularOrIllConditioned : public Error {
 public:
  SingularOrIllConditioned(std::size_t step, double row_norm, double tol);
  std::size_t step() const { return step_; }
  double row_norm() const { return row_norm_; }
  double tolerance() const { return tol_; }

 private:
  std::size_t step_;
  double row_norm_;
  double tol_;
};

class Degenerate2x2 : public Error {
 public:
  explicit Degenerate2x2(double det);
  double det() const { return det_; }

 private:
  double det_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. `line` is 1-based, 0 when unknown (e.g. premature EOF
// on an empty file).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NonFiniteValue : public ParseError {
 public:
  explicit NonFiniteValue(std::size_t line);
};

class HeaderUnsupported : public Error {
 public:
  explicit HeaderUnsupported(const std::string& header);
};

}  // namespace hhsolve

#endif  // HHSOLVE_ERRORS_HPP_
