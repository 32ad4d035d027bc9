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


#ifndef SDNFP_PROBES_PROBE_TRAIN_H_
#define SDNFP_PROBES_PROBE_TRAIN_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sdnfp/netsim/flow.h"
#include "sdnfp/netsim/path.h"
#include "sdnfp/probes/trace.h"
#include "sdnfp/units.h"

namespace sdnfp {

struct ScheduledProbe {
  Duration offset{0};
  Packet packet;  // trial 0, sent_at = offset
  ProbeRole role = ProbeRole::kOther;
  int group = 0;  // pair number or single number, from 0
};

struct ProbeTrain {
  FlowKey flow;
  std::vector<ScheduledProbe> schedule;
};

struct ProbeTrainOptions {
  /// Appends one control probe this long after the second single.
  std::optional<Duration> control_span;
  Bytes clear_size = 64;
};

inline constexpr Bytes kMinMtu = 64;

/// CLEAR at 0 s; four MTU-sized back-to-back pairs at 1, 2, 3, 4 s; CLEAR
/// at 5 s; single MTU-sized probes at 6 s and 7 s. Throws
/// std::invalid_argument if mtu < 64.
ProbeTrain build_probe_train(const FlowKey& flow, Bytes mtu, const ProbeTrainOptions& options = {});

struct TrainRunOptions {
  /// Trial i starts at i * train_period.
  Duration train_period = std::chrono::seconds(30);
  std::uint32_t first_trial = 0;
};

/// Runs `trials` independent instances of the train, each on a fresh
/// simulator with empty tables, and returns one record per packet.
Trace run_train(const ProbeTrain& train, const PathSpec& path, const ControllerSpec& controller, std::size_t trials,
                std::uint64_t seed, const TrainRunOptions& options = {});

/// The packets of one trial with absolute send times.
std::vector<Packet> materialize_trial(const ProbeTrain& train, std::uint32_t trial, Duration train_period);

}  // namespace sdnfp

#endif  // SDNFP_PROBES_PROBE_TRAIN_H_
