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


#ifndef SDNFP_EXPERIMENT_SCENARIO_H_
#define SDNFP_EXPERIMENT_SCENARIO_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdnfp/defense/config.h"
#include "sdnfp/features/features.h"
#include "sdnfp/netsim/path.h"
#include "sdnfp/units.h"

namespace sdnfp {

struct Scenario {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t trains = 450;
  Bytes mtu = 1500;
  Duration train_period = std::chrono::seconds(30);
  /// Gap between the second single and the trailing control probe.
  Duration span = std::chrono::seconds(1);
  std::size_t k = 0;
  SwitchKind switch_kind = SwitchKind::kHardware;
  Bandwidth data_link;
  PathSpec path;  // undefended
  ControllerSpec controller;
  /// Parameters used when the defense is switched on.
  DelayElementConfig defense_config;
  bool defense_enabled = false;
  FeatureOptions features;
  Duration bin_width{100'000};
  Duration passive_window = std::chrono::seconds(1);

  ScenarioContext context() const { return {k, switch_kind, data_link, span}; }
  /// The path actually simulated (with the element when enabled).
  PathSpec effective_path() const;
};

/// Parses a YAML scenario document. Each entry of `scenarios` is deep-merged
/// over `defaults`. Throws ConfigError with the offending field.
/// Relative file references resolve against `base_dir`.
std::vector<Scenario> parse_scenarios(const std::string& yaml_text, const std::filesystem::path& base_dir = {});
std::vector<Scenario> load_scenarios(const std::filesystem::path& file);

/// Per-k GPD parameters as JSON: {"per_k": {"2": {"first": {...},
/// "followup": {...}}}}. Throws IoError / ConfigError.
std::map<std::size_t, DelayParamsPair> load_fitted_params(const std::filesystem::path& file);
void save_fitted_params(const std::filesystem::path& file, const std::map<std::size_t, DelayParamsPair>& per_k);

}  // namespace sdnfp

#endif  // SDNFP_EXPERIMENT_SCENARIO_H_
