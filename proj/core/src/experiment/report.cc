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


#include "sdnfp/experiment/report.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sdnfp/errors.h"

namespace sdnfp {
namespace {

using Json = nlohmann::ordered_json;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Fixed-precision numbers keep the files byte-stable and diff-friendly.
Json num(double v, const char* f = "%.6f") { return Json::parse(fmt(f, v)); }

Json feature_json(const FeatureResult& r) {
  Json j;
  j["feature"] = std::string(to_string(r.feature));
  j["n_N"] = r.n_count;
  j["n_Y"] = r.y_count;
  if (r.eer) {
    j["eer"] = num(r.eer->eer, "%.6f");
    j["eer_pct"] = num(100.0 * r.eer->eer, "%.4f");
    j["threshold_ms"] = num(r.eer->threshold, "%.6f");
  } else {
    j["eer"] = nullptr;
  }
  if (r.ttest) {
    j["t_test"] = {{"t", num(r.ttest->t, "%.6f")},
                   {"df", num(r.ttest->df, "%.3f")},
                   {"p_value", num(r.ttest->p_value, "%.6e")},
                   {"significant_1pct", r.ttest->significant_at_1pct}};
  } else {
    j["t_test"] = {{"error", r.ttest_error}};
  }
  return j;
}

Json context_json(const ResultBundle& b) {
  return {{"k", b.context.k},
          {"switch_kind", std::string(to_string(b.context.kind))},
          {"data_link_bps", b.context.data_link.bits_per_second},
          {"span_s", num(static_cast<double>(b.context.span.count()) / 1e9, "%.3f")}};
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string result_json(const ResultBundle& b) {
  Json j;
  j["scenario"] = b.scenario;
  j["defended"] = b.defended;
  j["seed"] = b.seed;
  j["trains"] = b.trains;
  j["context"] = context_json(b);
  j["dropped"] = {{"missing_reply", b.samples.missing_reply}, {"ambiguous_label", b.samples.ambiguous}};
  j["features"] = Json::array();
  for (const auto& r : b.results) j["features"].push_back(feature_json(r));
  return j.dump(2) + "\n";
}

void write_summary_csv(std::ostream& os, std::span<const ResultBundle> bundles) {
  os << "scenario,feature,defended,k,kind,link_bps,span_s,eer_pct,threshold_ms,n_N,n_Y,t_stat,significant_1pct,"
        "missing_reply,ambiguous\n";
  for (const auto& b : bundles) {
    for (const auto& r : b.results) {
      os << b.scenario << ',' << to_string(r.feature) << ',' << (b.defended ? 1 : 0) << ',' << b.context.k << ','
         << to_string(b.context.kind) << ',' << b.context.data_link.bits_per_second << ','
         << fmt("%.3f", static_cast<double>(b.context.span.count()) / 1e9) << ',';
      if (r.eer) os << fmt("%.4f", 100.0 * r.eer->eer) << ',' << fmt("%.6f", r.eer->threshold);
      else os << ',';
      os << ',' << r.n_count << ',' << r.y_count << ',';
      if (r.ttest) os << fmt("%.6f", r.ttest->t) << ',' << (r.ttest->significant_at_1pct ? 1 : 0);
      else os << ',';
      os << ',' << b.samples.missing_reply << ',' << b.samples.ambiguous << '\n';
    }
  }
}

std::string summary_json(std::span<const ResultBundle> bundles) {
  Json rows = Json::array();
  for (const auto& b : bundles) {
    for (const auto& r : b.results) {
      Json row = feature_json(r);
      row["scenario"] = b.scenario;
      row["defended"] = b.defended;
      row["context"] = context_json(b);
      rows.push_back(row);
    }
  }
  return Json{{"rows", rows}}.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  out.close();
  if (!out) throw IoError("write failed: " + path.string());
}

namespace {

void write_histograms(const ResultBundle& b, const std::filesystem::path& dir) {
  for (const auto& r : b.results) {
    const std::string base = "hist_" + std::string(to_string(r.feature));
    if (r.hist_n) {
      std::ostringstream os;
      write_histogram_csv(os, *r.hist_n);
      write_file(dir / (base + "_N.csv"), os.str());
    }
    if (r.hist_y) {
      std::ostringstream os;
      write_histogram_csv(os, *r.hist_y);
      write_file(dir / (base + "_Y.csv"), os.str());
    }
  }
}

}  // namespace

void write_bundle(const ResultBundle& b, const std::filesystem::path& dir) {
  {
    std::ostringstream os;
    write_trace_csv(os, b.trace);
    write_file(dir / "trace.csv", os.str());
  }
  {
    std::ostringstream os;
    write_samples_csv(os, b.samples.samples);
    write_file(dir / "samples.csv", os.str());
  }
  write_file(dir / "result.json", result_json(b));
  write_histograms(b, dir);
}

void emit_report(std::span<const ResultBundle> bundles, const std::filesystem::path& out_dir, ReportFormat format) {
  if (bundles.empty()) throw std::invalid_argument("emit_report needs at least one bundle");
  if (format == ReportFormat::kCsv) {
    std::ostringstream os;
    write_summary_csv(os, bundles);
    write_file(out_dir / "summary.csv", os.str());
  } else {
    write_file(out_dir / "summary.json", summary_json(bundles));
  }
  for (const auto& b : bundles) write_histograms(b, out_dir / b.scenario);
}

}  // namespace sdnfp
