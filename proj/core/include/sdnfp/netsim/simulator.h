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


#ifndef SDNFP_NETSIM_SIMULATOR_H_
#define SDNFP_NETSIM_SIMULATOR_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "sdnfp/netsim/flow.h"
#include "sdnfp/netsim/path.h"
#include "sdnfp/netsim/rng.h"
#include "sdnfp/units.h"

namespace sdnfp {

class DelayElement;

enum class Direction { kForward = 0, kReverse = 1 };

/// Everything the simulator knows about one packet and its reply.
struct PacketTimeline {
  Packet packet;
  /// forward_hops[i] is the arrival time at the far end of forward link i.
  std::vector<Timestamp> forward_hops;
  std::optional<Timestamp> server_recv;
  std::optional<Timestamp> reply_sent;
  std::vector<Timestamp> reverse_hops;
  std::optional<Timestamp> client_recv;
  /// This packet triggered rule installation.
  bool miss = false;
  /// This packet waited behind a pending installation.
  bool held = false;
  bool table_full = false;
  bool dropped = false;
  Duration install_penalty{0};
  bool element_delayed = false;
  Duration element_delay{0};

  std::optional<Duration> rtt() const {
    if (!client_recv) return std::nullopt;
    return *client_recv - packet.sent_at;
  }
};

struct MissOutcome {
  Duration penalty{0};
  Duration lookup{0};
  /// One sample per configured switch.
  std::vector<Duration> install_delays;
  /// Indices of configured switches whose table had no room.
  std::vector<std::size_t> full_switches;
  bool table_full() const { return !full_switches.empty(); }
};

struct ExchangeResult {
  PacketTimeline timeline;
  std::optional<Duration> rtt;
};

struct PairResult {
  std::optional<Duration> server_dispersion;
  std::optional<Duration> reply_dispersion;
  std::optional<Duration> rtt_first;
  std::optional<Duration> rtt_second;
  PacketTimeline first;
  PacketTimeline second;
};

/// Event-driven model of one client/server path. State (link queues, flow
/// tables, pending installs, delay-element activity) persists across calls,
/// so successive calls must not go back in time.
class Simulator {
 public:
  Simulator(PathSpec path, ControllerSpec controller, std::uint64_t seed);
  ~Simulator();
  Simulator(Simulator&&) noexcept;
  Simulator& operator=(Simulator&&) noexcept;

  /// Runs the packets (any order) and their replies to completion.
  /// Timelines are returned in input order.
  std::vector<PacketTimeline> run(std::span<const Packet> packets);

  /// One packet through one direction only; returns per-hop arrivals.
  std::vector<Timestamp> forward_packet(const Packet& packet, Direction direction);

  ExchangeResult simulate_exchange(const Packet& packet);
  PairResult simulate_pair(const Packet& first, const Packet& second);

  /// Controller reaction to a miss of `key` at time `now`: installs the key
  /// in both directions on every configured switch and returns the penalty.
  MissOutcome handle_table_miss(const FlowKey& key, Timestamp now, std::uint32_t trial = 0,
                                std::uint64_t packet_id = 0);

  void clear_flow_tables();

  /// Installs `key` both ways on all configured switches at no cost.
  void preinstall(const FlowKey& key);
  /// Marks `key` as active at the delay element as of `now`.
  void prewarm_element(const FlowKey& key, Timestamp now);

  bool has_rule(std::size_t switch_index, const FlowKey& key) const;
  const PathSpec& path() const { return path_; }
  Timestamp now() const { return now_; }

 private:
  enum class Mode { kExchange, kForwardOnly, kReverseOnly };
  struct Pending {
    Timestamp installed_at;
    Duration penalty;
  };

  std::vector<PacketTimeline> run_mode(std::span<const Packet> packets, Mode mode);
  Duration cross_traffic(Direction dir, std::size_t link, Timestamp t);
  Duration drift(Direction dir, std::size_t link, Timestamp t);
  double drift_knot_ms(Direction dir, std::size_t link, std::int64_t knot);
  Duration jitter(const Packet& p, Direction dir, std::size_t link) const;

  PathSpec path_;
  ControllerSpec controller_;
  KeyedRng rng_;
  Timestamp now_{};
  std::vector<FlowTable> tables_;
  std::unordered_map<FlowKey, Pending, FlowKeyHash> pending_;
  std::vector<Timestamp> busy_until_[2];
  std::vector<Timestamp> last_arrival_[2];
  std::vector<int> switch_at_hop_;
  std::map<std::tuple<int, std::size_t, std::int64_t>, Duration> cross_cache_;
  std::map<std::tuple<int, std::size_t, std::int64_t>, double> drift_cache_;
  std::unique_ptr<DelayElement> element_;
};

/// Convenience wrapper: a fresh simulator over `packets`.
std::vector<PacketTimeline> simulate(const PathSpec& path, const ControllerSpec& controller, std::uint64_t seed,
                                     std::span<const Packet> packets);

}  // namespace sdnfp

#endif  // SDNFP_NETSIM_SIMULATOR_H_
