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


#ifndef SDNFP_NETSIM_PATH_H_
#define SDNFP_NETSIM_PATH_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sdnfp/defense/config.h"
#include "sdnfp/netsim/distribution.h"
#include "sdnfp/netsim/flow.h"
#include "sdnfp/units.h"

namespace sdnfp {

enum class SwitchKind { kHardware, kSoftware };

std::string_view to_string(SwitchKind kind);
/// Accepts "hardware"/"hw" and "software"/"sw".
SwitchKind parse_switch_kind(std::string_view text);

/// Queueing delay added by background traffic on a link. The backlog is
/// held constant over a coherence epoch, so packets sent close together see
/// the same queue.
struct CrossTrafficModel {
  enum class Kind { kNone, kConstant, kPareto };

  Kind kind = Kind::kNone;
  Duration mean{0};
  double variance_ms2 = 0.0;
  Duration coherence = std::chrono::milliseconds(5);

  static CrossTrafficModel none() { return {}; }
  static CrossTrafficModel constant(Duration d);
  static CrossTrafficModel pareto(Duration mean, double variance_ms2);
  /// Heavily loaded testbed port: Pareto, mean 20 ms, variance 4 ms^2.
  static CrossTrafficModel testbed_pareto();

  bool enabled() const { return kind != Kind::kNone; }
  Duration sample(std::mt19937_64& gen) const;
};

/// Slow random drift of a link's one-way latency: N(0, sd) knots every
/// `period`, linearly interpolated.
struct DriftModel {
  Duration sd{0};
  Duration period = std::chrono::minutes(5);
};

struct LinkSpec {
  Bandwidth capacity;
  Duration base_latency{0};
  CrossTrafficModel cross_traffic;
  /// Per-packet N(0, sd) propagation jitter.
  Duration jitter_sd{0};
  /// When false (default) a packet never arrives before the previous packet
  /// on this link. When true, jitter may reorder packets.
  bool reorder = false;
  std::optional<DriftModel> drift;
  /// Per-packet drop probability.
  double loss = 0.0;
};

Duration transmission_delay(Bytes size, Bandwidth capacity);
inline Duration transmission_delay(Bytes size, const LinkSpec& link) {
  return transmission_delay(size, link.capacity);
}

class SwitchSpec {
 public:
  /// `hop` is the index of the forward link the switch transmits onto.
  SwitchSpec(std::string id, SwitchKind kind, std::size_t hop, DelayDistribution install_delay,
             std::size_t table_capacity = 4096);

  const std::string& id() const { return id_; }
  SwitchKind kind() const { return kind_; }
  std::size_t hop() const { return hop_; }
  const DelayDistribution& install_delay() const { return install_delay_; }
  std::size_t table_capacity() const { return table_capacity_; }

  void set_install_delay(DelayDistribution d) { install_delay_ = std::move(d); }
  void set_table_capacity(std::size_t c) { table_capacity_ = c; }

 private:
  std::string id_;
  SwitchKind kind_;
  std::size_t hop_;
  DelayDistribution install_delay_;
  std::size_t table_capacity_;
};

struct ControllerSpec {
  DelayDistribution lookup_delay = ConstantDelay{};
  /// Time from CLEAR arrival at the server to empty tables.
  Duration clear_delay = std::chrono::milliseconds(10);
};

struct PathSpec {
  std::vector<LinkSpec> forward_links;  // client -> server
  std::vector<LinkSpec> reverse_links;  // server -> client
  std::vector<SwitchSpec> switches;     // ordered from the client side
  /// The first `configured_count` switches install rules on a miss.
  std::size_t configured_count = 0;
  std::optional<DelayElementConfig> delay_element;
  Bytes reply_size = 64;
  Duration server_turnaround{0};

  /// Throws ConfigError naming the offending field.
  void validate() const;

  /// Smallest-capacity forward link; the earliest wins ties.
  std::size_t bottleneck_index() const;
  Bandwidth bottleneck_capacity() const { return forward_links.at(bottleneck_index()).capacity; }
};

enum class PacketKind { kClear, kProbe, kReply };

std::string_view to_string(PacketKind kind);
PacketKind parse_packet_kind(std::string_view text);

struct Packet {
  std::uint32_t trial = 0;
  std::uint64_t id = 0;
  FlowKey key;
  Bytes size = 0;
  PacketKind kind = PacketKind::kProbe;
  Timestamp sent_at{};
};

}  // namespace sdnfp

#endif  // SDNFP_NETSIM_PATH_H_
