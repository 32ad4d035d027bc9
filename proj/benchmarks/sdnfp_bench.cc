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


#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "sdnfp/experiment/runner.h"
#include "sdnfp/netsim/simulator.h"
#include "sdnfp/probes/probe_train.h"
#include "sdnfp/stats/eer.h"
#include "sdnfp/stats/gpd.h"

namespace sdnfp {
namespace {

using std::chrono::milliseconds;

PathSpec lab_path(std::size_t k) {
  PathSpec p;
  LinkSpec l;
  l.capacity = megabits_per_second(100);
  l.base_latency = Duration{50'000};
  l.cross_traffic = CrossTrafficModel::pareto(Duration{500'000}, 0.0025);
  for (std::size_t i = 0; i <= k; ++i) {
    p.forward_links.push_back(l);
    p.reverse_links.push_back(l);
  }
  for (std::size_t i = 0; i < k; ++i)
    p.switches.emplace_back("s" + std::to_string(i), SwitchKind::kHardware, i + 1,
                            LogNormalDelay{Duration{1'500'000}, 0.6});
  p.configured_count = k;
  return p;
}

void BM_ProbeTrainTrials(benchmark::State& state) {
  const PathSpec path = lab_path(static_cast<std::size_t>(state.range(0)));
  const ProbeTrain train = build_probe_train(probe_flow(), 1500);
  for (auto _ : state) benchmark::DoNotOptimize(run_train(train, path, {}, 100, 1));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_ProbeTrainTrials)->Arg(1)->Arg(3);

void BM_ComputeEer(benchmark::State& state) {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> dn(0, 1), dy(1, 1);
  std::vector<double> n(static_cast<std::size_t>(state.range(0))), y(n.size());
  for (auto& v : n) v = dn(gen);
  for (auto& v : y) v = dy(gen);
  for (auto _ : state) benchmark::DoNotOptimize(compute_eer(n, y, false));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 2);
}
BENCHMARK(BM_ComputeEer)->Arg(1'000)->Arg(100'000);

void BM_FitGpd(benchmark::State& state) {
  std::mt19937_64 gen(2);
  const GPDParams p{-0.53, 10.58, 0.57};
  std::vector<double> s(static_cast<std::size_t>(state.range(0)));
  for (auto& v : s) v = gpd_sample(p, gen);
  for (auto _ : state) benchmark::DoNotOptimize(fit_gpd(s));
}
BENCHMARK(BM_FitGpd)->Arg(450)->Arg(10'000);

}  // namespace
}  // namespace sdnfp

BENCHMARK_MAIN();
