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

#ifndef HHSOLVE_CLI_HPP_
#define HHSOLVE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace hhsolve::cli {

// Process exit codes. Every command path ends in exactly one of these.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,        // I/O, parse, usage and input validation errors
  kSingular = 2,       // singular or ill-conditioned system
  kDisagreement = 3,   // verify: solvers disagree beyond 1e-8
  kCountMismatch = 4,  // bench: measured count differs from the closed form
};

// Relative difference accepted by `verify`.
inline constexpr double kVerifyTolerance = 1e-8;

// Entry point shared by the executable and the tests. `args` excludes the
// program name. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hhsolve::cli

#endif  // HHSOLVE_CLI_HPP_
