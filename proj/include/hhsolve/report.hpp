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

#ifndef HHSOLVE_REPORT_HPP_
#define HHSOLVE_REPORT_HPP_

#include <filesystem>
#include <string_view>

#include "json.hpp"

#include "hhsolve/solver.hpp"

namespace hhsolve::io {

inline constexpr std::string_view kReportSchemaVersion = "1.0";

// Solve report as a JSON document with keys schema_version, n, strategy,
// tol_singular, x, relative_residual, min_row_norm, forward_sv, backward_sv,
// predicted_forward_sv, predicted_total_sv, warnings, elapsed_seconds.
// Predicted counts are null for n < 3.
nlohmann::json report_document(const SolverReport& report);

// Pretty-printed, newline-terminated. Throws IoError.
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace hhsolve::io

#endif  // HHSOLVE_REPORT_HPP_
