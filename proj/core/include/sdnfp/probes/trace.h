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


#ifndef SDNFP_PROBES_TRACE_H_
#define SDNFP_PROBES_TRACE_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "sdnfp/netsim/flow.h"
#include "sdnfp/netsim/path.h"
#include "sdnfp/units.h"

namespace sdnfp {

enum class ProbeRole { kClear, kPairFirst, kPairSecond, kSingle, kControl, kOther };

std::string_view to_string(ProbeRole role);
ProbeRole parse_probe_role(std::string_view text);

/// One packet's send/receive log. Unobserved events are empty.
struct TraceRecord {
  std::uint32_t trial = 0;
  std::uint64_t id = 0;
  PacketKind kind = PacketKind::kProbe;
  ProbeRole role = ProbeRole::kOther;
  int group = 0;
  FlowKey flow;
  Timestamp client_send{};
  std::optional<Timestamp> server_recv;
  std::optional<Timestamp> server_reply_send;
  std::optional<Timestamp> client_recv;
  /// Ground truth, simulated traces only.
  std::optional<bool> miss;

  std::optional<Duration> rtt() const {
    if (!client_recv) return std::nullopt;
    return *client_recv - client_send;
  }
};

using Trace = std::vector<TraceRecord>;

/// Header row, then one row per record; timestamps in integer ns.
void write_trace_csv(std::ostream& os, const Trace& trace);
/// Throws IoError on malformed input.
Trace read_trace_csv(std::istream& is);

}  // namespace sdnfp

#endif  // SDNFP_PROBES_TRACE_H_
