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


#ifndef SDNFP_EXPERIMENT_RUNNER_H_
#define SDNFP_EXPERIMENT_RUNNER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdnfp/experiment/scenario.h"
#include "sdnfp/features/features.h"
#include "sdnfp/probes/trace.h"
#include "sdnfp/stats/eer.h"
#include "sdnfp/stats/histogram.h"
#include "sdnfp/stats/ttest.h"

namespace sdnfp {

struct FeatureResult {
  Feature feature = Feature::kDispersion;
  std::size_t n_count = 0;
  std::size_t y_count = 0;
  /// Empty when either population is empty.
  std::optional<EERResult> eer;
  /// Empty when the test is undefined (see ttest_error).
  std::optional<TTestResult> ttest;
  std::string ttest_error;
  std::optional<Histogram> hist_n;
  std::optional<Histogram> hist_y;
};

struct ResultBundle {
  std::string scenario;
  ScenarioContext context;
  bool defended = false;
  std::uint64_t seed = 0;
  std::size_t trains = 0;
  Trace trace;
  FeatureSet samples;
  std::vector<FeatureResult> results;

  const FeatureResult* find(Feature f) const;
};

/// The fixed flow key used by every probe train.
FlowKey probe_flow();

/// EER, t-test and histograms of one feature.
FeatureResult evaluate_feature(Feature f, const FeatureSet& samples, Duration bin_width);
std::vector<FeatureResult> evaluate(const FeatureSet& samples, const FeatureOptions& options, Duration bin_width);

/// Simulates the scenario's trains and evaluates its features.
/// Deterministic in (scenario, seed). Throws ConfigError on invalid input.
ResultBundle run_scenario(const Scenario& scenario);

/// Runs scenarios on a worker pool; results keep input order.
/// `threads` = 0 picks the hardware concurrency.
std::vector<ResultBundle> run_scenarios(const std::vector<Scenario>& scenarios, unsigned threads = 0);

}  // namespace sdnfp

#endif  // SDNFP_EXPERIMENT_RUNNER_H_
