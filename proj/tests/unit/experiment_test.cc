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


#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <gtest/gtest.h>

#include "sdnfp/errors.h"
#include "sdnfp/experiment/report.h"
#include "sdnfp/experiment/runner.h"
#include "sdnfp/experiment/scenario.h"

namespace sdnfp {
namespace {

namespace fs = std::filesystem;
using std::chrono::milliseconds;

const std::string kSmall = R"(
defaults:
  seed: 7
  trains: 40
  mtu: 1500B
  train_period: 30s
  span: 1s
  path:
    wan: {capacity: data_link, latency: 10ms, jitter: 0.1ms}
    lab_link: {capacity: data_link, latency: 0.05ms, cross_traffic: none}
  switch_kinds:
    hardware: {install_delay: {dist: constant, value: 3ms}}
    software: {install_delay: {dist: constant, value: 1ms}}
  controller: {lookup_delay: {dist: constant, value: 0.2ms}}
scenarios:
  - {name: a, k: 2, switch_kind: hardware, data_link: 100Mbps}
  - {name: b, k: 1, switch_kind: software, data_link: 1Gbps, trains: 30}
)";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("sdnfp_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string config_error_field(const std::string& yaml) {
  try {
    parse_scenarios(yaml);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<no error>";
}

TEST(Scenarios, ShippedConfigLoads) {
  const auto s = load_scenarios(fs::path(SDNFP_CONFIG_DIR) / "scenarios.yaml");
  ASSERT_EQ(s.size(), 8u);
  EXPECT_EQ(s[0].name, "k3-hw-100m");
  EXPECT_EQ(s[0].k, 3u);
  EXPECT_EQ(s[0].trains, 450u);
  EXPECT_EQ(s[0].data_link, megabits_per_second(100));
  EXPECT_EQ(s[0].path.configured_count, 3u);
  EXPECT_NO_THROW(s[0].path.validate());
  EXPECT_EQ(s[3].switch_kind, SwitchKind::kSoftware);
  EXPECT_FALSE(s[0].defense_enabled);
  const auto d = load_scenarios(fs::path(SDNFP_CONFIG_DIR) / "drift.yaml");
  EXPECT_FALSE(d.empty());
}

TEST(Scenarios, DefaultsMergeAndOverride) {
  const auto s = parse_scenarios(kSmall);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].trains, 40u);
  EXPECT_EQ(s[1].trains, 30u);
  EXPECT_EQ(s[1].data_link, gigabits_per_second(1));
  EXPECT_EQ(s[1].path.forward_links[0].capacity, gigabits_per_second(1));
  EXPECT_EQ(s[0].path.forward_links.size(), 3u);
  EXPECT_EQ(s[0].path.forward_links[0].base_latency, milliseconds(10));
  // Nested maps merge key by key.
  const auto m = parse_scenarios(replace(kSmall, "{name: a, k: 2,", "{name: a, path: {wan: {latency: 20ms}}, k: 2,"));
  EXPECT_EQ(m[0].path.forward_links[0].base_latency, milliseconds(20));
  EXPECT_EQ(m[0].path.forward_links[0].jitter_sd, Duration{100'000});
  EXPECT_EQ(m[1].path.forward_links[0].base_latency, milliseconds(10));
}

TEST(Scenarios, ConfigErrorsNameTheField) {
  EXPECT_NE(config_error_field(replace(kSmall, "trains: 40", "trains: 0")).find("trains"), std::string::npos);
  EXPECT_NE(config_error_field(replace(kSmall, "  seed: 7\n", "")).find("seed"), std::string::npos);
  EXPECT_NE(config_error_field(replace(kSmall, "latency: 10ms", "latency: 10")).find("latency"), std::string::npos);
  EXPECT_NE(config_error_field(replace(kSmall, "name: b", "name: a")).find("name"), std::string::npos);
  EXPECT_NE(config_error_field(replace(kSmall, "train_period: 30s", "train_period: 5s")).find("train_period"),
            std::string::npos);
  EXPECT_NE(config_error_field(replace(kSmall, "dist: constant, value: 3ms", "dist: cauchy")).find("dist"),
            std::string::npos);
  EXPECT_THROW(parse_scenarios("scenarios: []"), ConfigError);
  EXPECT_THROW(load_scenarios("/nonexistent/file.yaml"), ConfigError);
}

TEST(RunScenario, ProducesBothFeatures) {
  const auto s = parse_scenarios(kSmall);
  const ResultBundle b = run_scenario(s[0]);
  EXPECT_EQ(b.scenario, "a");
  EXPECT_EQ(b.trace.size(), 40u * 13u);  // train plus control probe
  const FeatureResult* disp = b.find(Feature::kDispersion);
  const FeatureResult* drtt = b.find(Feature::kDeltaRtt);
  ASSERT_NE(disp, nullptr);
  ASSERT_NE(drtt, nullptr);
  EXPECT_EQ(disp->y_count, 40u);
  EXPECT_EQ(disp->n_count, 120u);
  EXPECT_EQ(drtt->y_count, 40u);
  ASSERT_TRUE(disp->eer.has_value());
  EXPECT_LT(disp->eer->eer, 0.05);
  EXPECT_TRUE(disp->hist_n.has_value());
}

TEST(RunScenario, DefenseRaisesEer) {
  auto s = parse_scenarios(kSmall)[0];
  s.trains = 200;
  const double plain = run_scenario(s).find(Feature::kDeltaRtt)->eer->eer;
  s.defense_enabled = true;
  const ResultBundle d = run_scenario(s);
  EXPECT_TRUE(d.defended);
  EXPECT_GT(d.find(Feature::kDeltaRtt)->eer->eer, plain + 0.2);
}

TEST(RunScenarios, ParallelMatchesSequential) {
  const auto s = parse_scenarios(kSmall);
  const auto seq = run_scenarios(s, 1);
  const auto par = run_scenarios(s, 4);
  ASSERT_EQ(seq.size(), par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) EXPECT_EQ(result_json(seq[i]), result_json(par[i]));
}

TEST(Report, SummaryHasOneRowPerScenarioAndFeature) {
  const auto bundles = run_scenarios(parse_scenarios(kSmall), 1);
  std::ostringstream os;
  write_summary_csv(os, bundles);
  const std::string csv = os.str();
  EXPECT_EQ(csv.rfind("scenario,feature,defended,", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 2 * 2);

  const fs::path dir = scratch("report");
  emit_report(bundles, dir, ReportFormat::kCsv);
  EXPECT_TRUE(fs::exists(dir / "summary.csv"));
  const fs::path hist = dir / "a" / "hist_dispersion_Y.csv";
  ASSERT_TRUE(fs::exists(hist));
  const std::string h = read_all(hist);
  const auto& counts = bundles[0].find(Feature::kDispersion)->hist_y->counts;
  EXPECT_EQ(static_cast<std::size_t>(std::count(h.begin(), h.end(), '\n')), counts.size() + 1);
  emit_report(bundles, dir, ReportFormat::kJson);
  EXPECT_TRUE(fs::exists(dir / "summary.json"));
  EXPECT_EQ(parse_report_format("json"), ReportFormat::kJson);
  EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
}

TEST(Report, ByteIdenticalAcrossRuns) {
  const auto s = parse_scenarios(kSmall)[1];
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  write_bundle(run_scenario(s), a);
  write_bundle(run_scenario(s), b);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    ++files;
    EXPECT_EQ(read_all(e.path()), read_all(b / e.path().filename())) << e.path();
  }
  EXPECT_GE(files, 3u);
}

TEST(FittedParams, JsonRoundTrip) {
  std::map<std::size_t, DelayParamsPair> m;
  m[1] = {{-0.5, 3.25, 0.125}, {-0.25, 1.5, 0.0625}};
  m[3] = {{0.0, 1.0, 0.0}, {0.1, 2.0, 0.5}};
  const fs::path f = scratch("fitted") / "fitted.json";
  save_fitted_params(f, m);
  const auto back = load_fitted_params(f);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back.at(1).first, m[1].first);
  EXPECT_EQ(back.at(1).followup, m[1].followup);
  EXPECT_EQ(back.at(3).followup, m[3].followup);
  write_file(f, "{\"nope\": 1}");
  EXPECT_THROW(load_fitted_params(f), ConfigError);
}

}  // namespace
}  // namespace sdnfp
