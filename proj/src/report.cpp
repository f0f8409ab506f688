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

#include "hhsolve/report.hpp"

#include <fstream>

#include "hhsolve/errors.hpp"

namespace hhsolve::io {

nlohmann::json report_document(const SolverReport& report) {
  nlohmann::json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["n"] = report.n;
  doc["strategy"] = to_string(report.strategy);
  doc["tol_singular"] = report.tol_singular;
  doc["x"] = std::vector<double>(report.x.begin(), report.x.end());
  doc["relative_residual"] = report.relative_residual;
  doc["min_row_norm"] = report.min_row_norm;
  doc["forward_sv"] = report.counter.forward_sv;
  doc["backward_sv"] = report.counter.backward_sv;
  doc["predicted_forward_sv"] = nullptr;
  doc["predicted_total_sv"] = nullptr;
  if (report.predicted_forward_sv) doc["predicted_forward_sv"] = *report.predicted_forward_sv;
  if (report.predicted_total_sv) doc["predicted_total_sv"] = *report.predicted_total_sv;
  doc["warnings"] = report.warnings;
  doc["elapsed_seconds"] = report.elapsed_seconds;
  return doc;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace hhsolve::io
