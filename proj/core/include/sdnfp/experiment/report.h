// Copyright 2026 The sdnfp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef SDNFP_EXPERIMENT_REPORT_H_
#define SDNFP_EXPERIMENT_REPORT_H_

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "sdnfp/experiment/runner.h"

namespace sdnfp {

enum class ReportFormat { kCsv, kJson };

ReportFormat parse_report_format(std::string_view text);

/// Result record of one bundle (no trace or samples) as pretty JSON.
std::string result_json(const ResultBundle& bundle);

/// Summary table: one row per (scenario, feature).
void write_summary_csv(std::ostream& os, std::span<const ResultBundle> bundles);
std::string summary_json(std::span<const ResultBundle> bundles);

/// trace.csv, samples.csv, result.json and histogram CSVs under `dir`.
void write_bundle(const ResultBundle& bundle, const std::filesystem::path& dir);

/// Writes summary.{csv,json} to `out_dir` and, per scenario,
/// `<out_dir>/<scenario>/hist_<feature>_{N,Y}.csv`. Throws IoError.
void emit_report(std::span<const ResultBundle> bundles, const std::filesystem::path& out_dir, ReportFormat format);

/// Opens `path` for writing, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace sdnfp

#endif  // SDNFP_EXPERIMENT_REPORT_H_
