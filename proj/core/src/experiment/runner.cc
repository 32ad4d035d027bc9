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


#include "sdnfp/experiment/runner.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "sdnfp/errors.h"
#include "sdnfp/probes/probe_train.h"

namespace sdnfp {

const FeatureResult* ResultBundle::find(Feature f) const {
  for (const auto& r : results)
    if (r.feature == f) return &r;
  return nullptr;
}

FlowKey probe_flow() { return FlowKey{0x0A000001, 0x0A000101, 40000, 7, 17}; }

FeatureResult evaluate_feature(Feature f, const FeatureSet& samples, Duration bin_width) {
  FeatureResult r;
  r.feature = f;
  const std::vector<Duration> n = samples.values(f, Label::kN);
  const std::vector<Duration> y = samples.values(f, Label::kY);
  r.n_count = n.size();
  r.y_count = y.size();
  if (!n.empty()) r.hist_n = build_histogram(n, bin_width);
  if (!y.empty()) r.hist_y = build_histogram(y, bin_width);
  if (n.empty() || y.empty()) {
    r.ttest_error = "empty population";
    return r;
  }
  r.eer = compute_eer(n, y, /*keep_curve=*/false);
  std::vector<double> nm, ym;
  for (Duration d : n) nm.push_back(to_ms(d));
  for (Duration d : y) ym.push_back(to_ms(d));
  try {
    r.ttest = welch_t_test(nm, ym);
  } catch (const DegenerateVariance& e) {
    r.ttest_error = e.what();
  }
  return r;
}

std::vector<FeatureResult> evaluate(const FeatureSet& samples, const FeatureOptions& options, Duration bin_width) {
  std::vector<FeatureResult> out;
  if (options.dispersion) out.push_back(evaluate_feature(Feature::kDispersion, samples, bin_width));
  if (options.delta_rtt_singles || options.delta_rtt_pairs)
    out.push_back(evaluate_feature(Feature::kDeltaRtt, samples, bin_width));
  return out;
}

ResultBundle run_scenario(const Scenario& scenario) {
  if (scenario.trains == 0) throw ConfigError(scenario.name + ".trains", "must be >= 1");
  ProbeTrainOptions opts;
  if (scenario.features.delta_rtt_singles) opts.control_span = scenario.span;
  const ProbeTrain train = build_probe_train(probe_flow(), scenario.mtu, opts);
  const PathSpec path = scenario.effective_path();

  ResultBundle b;
  b.scenario = scenario.name;
  b.context = scenario.context();
  b.defended = scenario.defense_enabled;
  b.seed = scenario.seed;
  b.trains = scenario.trains;
  TrainRunOptions ro;
  ro.train_period = scenario.train_period;
  b.trace = run_train(train, path, scenario.controller, scenario.trains, scenario.seed, ro);
  b.samples = label_samples(b.trace, b.context, scenario.features);
  b.results = evaluate(b.samples, scenario.features, scenario.bin_width);
  return b;
}

std::vector<ResultBundle> run_scenarios(const std::vector<Scenario>& scenarios, unsigned threads) {
  std::vector<ResultBundle> out(scenarios.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, scenarios.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < scenarios.size(); i = next++) {
      try {
        out[i] = run_scenario(scenarios[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace sdnfp
