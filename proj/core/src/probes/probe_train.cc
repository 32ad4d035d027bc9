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


#include "sdnfp/probes/probe_train.h"

#include <stdexcept>

#include "sdnfp/netsim/simulator.h"

namespace sdnfp {

ProbeTrain build_probe_train(const FlowKey& flow, Bytes mtu, const ProbeTrainOptions& options) {
  if (mtu < kMinMtu) throw std::invalid_argument("mtu must be >= 64 bytes");
  using std::chrono::seconds;
  ProbeTrain train;
  train.flow = flow;
  std::uint64_t id = 0;
  auto add = [&](Duration offset, Bytes size, PacketKind kind, ProbeRole role, int group) {
    ScheduledProbe p;
    p.offset = offset;
    p.role = role;
    p.group = group;
    p.packet.id = id++;
    p.packet.key = flow;
    p.packet.size = size;
    p.packet.kind = kind;
    p.packet.sent_at = Timestamp{offset};
    train.schedule.push_back(p);
  };
  add(seconds(0), options.clear_size, PacketKind::kClear, ProbeRole::kClear, 0);
  for (int i = 0; i < 4; ++i) {
    add(seconds(1 + i), mtu, PacketKind::kProbe, ProbeRole::kPairFirst, i);
    add(seconds(1 + i), mtu, PacketKind::kProbe, ProbeRole::kPairSecond, i);
  }
  add(seconds(5), options.clear_size, PacketKind::kClear, ProbeRole::kClear, 1);
  add(seconds(6), mtu, PacketKind::kProbe, ProbeRole::kSingle, 0);
  add(seconds(7), mtu, PacketKind::kProbe, ProbeRole::kSingle, 1);
  if (options.control_span) {
    if (options.control_span->count() <= 0) throw std::invalid_argument("control span must be > 0");
    add(seconds(7) + *options.control_span, mtu, PacketKind::kProbe, ProbeRole::kControl, 0);
  }
  return train;
}

std::vector<Packet> materialize_trial(const ProbeTrain& train, std::uint32_t trial, Duration train_period) {
  std::vector<Packet> out;
  out.reserve(train.schedule.size());
  const Timestamp start{train_period * static_cast<std::int64_t>(trial)};
  const auto per_trial = static_cast<std::uint64_t>(train.schedule.size());
  for (const auto& sp : train.schedule) {
    Packet p = sp.packet;
    p.trial = trial;
    p.id = std::uint64_t{trial} * per_trial + sp.packet.id;
    p.sent_at = start + sp.offset;
    out.push_back(p);
  }
  return out;
}

Trace run_train(const ProbeTrain& train, const PathSpec& path, const ControllerSpec& controller, std::size_t trials,
                std::uint64_t seed, const TrainRunOptions& options) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  Trace trace;
  trace.reserve(trials * train.schedule.size());
  for (std::size_t i = 0; i < trials; ++i) {
    const auto trial = static_cast<std::uint32_t>(options.first_trial + i);
    const std::vector<Packet> packets = materialize_trial(train, trial, options.train_period);
    Simulator sim(path, controller, seed);
    const auto timelines = sim.run(packets);
    for (std::size_t j = 0; j < timelines.size(); ++j) {
      const auto& tl = timelines[j];
      TraceRecord r;
      r.trial = trial;
      r.id = tl.packet.id;
      r.kind = tl.packet.kind;
      r.role = train.schedule[j].role;
      r.group = train.schedule[j].group;
      r.flow = tl.packet.key;
      r.client_send = tl.packet.sent_at;
      r.server_recv = tl.server_recv;
      r.server_reply_send = tl.reply_sent;
      r.client_recv = tl.client_recv;
      r.miss = tl.miss;
      trace.push_back(r);
    }
  }
  return trace;
}

}  // namespace sdnfp
