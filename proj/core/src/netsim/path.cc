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


#include "sdnfp/netsim/path.h"

#include <set>
#include <stdexcept>

#include "sdnfp/errors.h"

namespace sdnfp {

std::string_view to_string(SwitchKind kind) {
  return kind == SwitchKind::kHardware ? "hardware" : "software";
}

SwitchKind parse_switch_kind(std::string_view text) {
  if (text == "hardware" || text == "hw") return SwitchKind::kHardware;
  if (text == "software" || text == "sw") return SwitchKind::kSoftware;
  throw std::invalid_argument("unknown switch kind '" + std::string(text) + "'");
}

std::string_view to_string(PacketKind kind) {
  switch (kind) {
    case PacketKind::kClear: return "CLEAR";
    case PacketKind::kProbe: return "PROBE";
    case PacketKind::kReply: return "REPLY";
  }
  return "?";
}

PacketKind parse_packet_kind(std::string_view text) {
  if (text == "CLEAR") return PacketKind::kClear;
  if (text == "PROBE") return PacketKind::kProbe;
  if (text == "REPLY") return PacketKind::kReply;
  throw std::invalid_argument("unknown packet kind '" + std::string(text) + "'");
}

CrossTrafficModel CrossTrafficModel::constant(Duration d) {
  CrossTrafficModel m;
  m.kind = Kind::kConstant;
  m.mean = d;
  return m;
}

CrossTrafficModel CrossTrafficModel::pareto(Duration mean, double variance_ms2) {
  CrossTrafficModel m;
  m.kind = Kind::kPareto;
  m.mean = mean;
  m.variance_ms2 = variance_ms2;
  return m;
}

CrossTrafficModel CrossTrafficModel::testbed_pareto() {
  return pareto(std::chrono::milliseconds(20), 4.0);
}

Duration CrossTrafficModel::sample(std::mt19937_64& gen) const {
  switch (kind) {
    case Kind::kNone: return Duration{0};
    case Kind::kConstant: return mean;
    case Kind::kPareto: return sdnfp::sample(ParetoDelay{mean, variance_ms2}, gen);
  }
  return Duration{0};
}

Duration transmission_delay(Bytes size, Bandwidth capacity) {
  const auto num = static_cast<std::int64_t>(size) * 8 * 1'000'000'000LL;
  return Duration{div_round_half_up(num, static_cast<std::int64_t>(capacity.bits_per_second))};
}

SwitchSpec::SwitchSpec(std::string id, SwitchKind kind, std::size_t hop, DelayDistribution install_delay,
                       std::size_t table_capacity)
    : id_(std::move(id)),
      kind_(kind),
      hop_(hop),
      install_delay_(std::move(install_delay)),
      table_capacity_(table_capacity) {}

namespace {

void validate_link(const LinkSpec& l, const std::string& where) {
  if (l.capacity.bits_per_second == 0) throw ConfigError(where + ".capacity", "must be > 0");
  if (l.base_latency.count() < 0) throw ConfigError(where + ".base_latency", "must be >= 0");
  if (l.jitter_sd.count() < 0) throw ConfigError(where + ".jitter", "must be >= 0");
  if (l.loss < 0.0 || l.loss >= 1.0) throw ConfigError(where + ".loss", "must be in [0, 1)");
  const auto& ct = l.cross_traffic;
  if (ct.enabled()) {
    if (ct.mean.count() < 0) throw ConfigError(where + ".cross_traffic.mean", "must be >= 0");
    if (ct.kind == CrossTrafficModel::Kind::kPareto && (ct.mean.count() <= 0 || ct.variance_ms2 <= 0.0))
      throw ConfigError(where + ".cross_traffic", "pareto needs mean > 0 and variance > 0");
    if (ct.coherence.count() <= 0) throw ConfigError(where + ".cross_traffic.coherence", "must be > 0");
  }
  if (l.drift && (l.drift->period.count() <= 0 || l.drift->sd.count() < 0))
    throw ConfigError(where + ".drift", "needs period > 0 and sd >= 0");
}

}  // namespace

void PathSpec::validate() const {
  if (forward_links.empty()) throw ConfigError("path.forward_links", "need at least one link");
  if (reverse_links.empty()) throw ConfigError("path.reverse_links", "need at least one link");
  for (std::size_t i = 0; i < forward_links.size(); ++i)
    validate_link(forward_links[i], "path.forward_links[" + std::to_string(i) + "]");
  for (std::size_t i = 0; i < reverse_links.size(); ++i)
    validate_link(reverse_links[i], "path.reverse_links[" + std::to_string(i) + "]");
  if (configured_count > switches.size())
    throw ConfigError("path.configured_count", "exceeds the number of switches");
  std::set<std::size_t> hops;
  for (std::size_t i = 0; i < switches.size(); ++i) {
    const auto& s = switches[i];
    const std::string where = "path.switches[" + std::to_string(i) + "]";
    if (s.hop() >= forward_links.size()) throw ConfigError(where + ".hop", "beyond the last forward link");
    if (!hops.insert(s.hop()).second) throw ConfigError(where + ".hop", "two switches on one hop");
    if (i > 0 && s.hop() < switches[i - 1].hop()) throw ConfigError(where + ".hop", "switches must be in path order");
    if (!is_nonnegative(s.install_delay(), /*strict=*/true))
      throw ConfigError(where + ".install_delay", "samples must be > 0");
    if (s.table_capacity() == 0) throw ConfigError(where + ".table_capacity", "must be > 0");
  }
  if (reply_size == 0) throw ConfigError("path.reply_size", "must be > 0");
  if (server_turnaround.count() < 0) throw ConfigError("path.server_turnaround", "must be >= 0");
  if (delay_element) {
    if (switches.empty()) throw ConfigError("defense", "the delay element needs at least one switch");
    try {
      delay_element->validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("defense", e.what());
    }
  }
}

std::size_t PathSpec::bottleneck_index() const {
  if (forward_links.empty()) throw std::logic_error("bottleneck_index on an empty path");
  std::size_t best = 0;
  for (std::size_t i = 1; i < forward_links.size(); ++i)
    if (forward_links[i].capacity.bits_per_second < forward_links[best].capacity.bits_per_second) best = i;
  return best;
}

}  // namespace sdnfp
