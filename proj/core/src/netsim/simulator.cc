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


#include "sdnfp/netsim/simulator.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "sdnfp/defense/delay_element.h"

namespace sdnfp {
namespace {

struct Event {
  Timestamp t;
  std::uint64_t seq;
  enum class Type { kArrive, kClear } type;
  std::size_t packet;
  Direction dir;
  std::size_t node;
};

struct Later {
  bool operator()(const Event& a, const Event& b) const {
    if (a.t != b.t) return a.t > b.t;
    return a.seq > b.seq;
  }
};

int dir_index(Direction d) { return d == Direction::kForward ? 0 : 1; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Simulator::Simulator(PathSpec path, ControllerSpec controller, std::uint64_t seed)
    : path_(std::move(path)), controller_(std::move(controller)), rng_(seed) {
  path_.validate();
  for (const auto& s : path_.switches) tables_.emplace_back(s.table_capacity());
  busy_until_[0].assign(path_.forward_links.size(), Timestamp{});
  busy_until_[1].assign(path_.reverse_links.size(), Timestamp{});
  last_arrival_[0].assign(path_.forward_links.size(), Timestamp{});
  last_arrival_[1].assign(path_.reverse_links.size(), Timestamp{});
  switch_at_hop_.assign(path_.forward_links.size(), -1);
  for (std::size_t i = 0; i < path_.switches.size(); ++i)
    switch_at_hop_[path_.switches[i].hop()] = static_cast<int>(i);
  if (path_.delay_element) {
    element_ = std::make_unique<DelayElement>(*path_.delay_element, path_.configured_count, rng_);
  }
}

Simulator::~Simulator() = default;
Simulator::Simulator(Simulator&&) noexcept = default;
Simulator& Simulator::operator=(Simulator&&) noexcept = default;

bool Simulator::has_rule(std::size_t switch_index, const FlowKey& key) const {
  return tables_.at(switch_index).contains(key);
}

void Simulator::clear_flow_tables() {
  for (auto& t : tables_) t.clear();
  pending_.clear();
}

void Simulator::preinstall(const FlowKey& key) {
  for (std::size_t i = 0; i < path_.configured_count; ++i) {
    tables_[i].insert(key);
    tables_[i].insert(key.reversed());
  }
}

void Simulator::prewarm_element(const FlowKey& key, Timestamp now) {
  if (element_) element_->touch(key, now);
}

MissOutcome Simulator::handle_table_miss(const FlowKey& key, Timestamp now, std::uint32_t trial,
                                         std::uint64_t packet_id) {
  MissOutcome out;
  {
    auto gen = rng_.engine(Stream::kLookup, trial, packet_id);
    out.lookup = std::max(Duration{0}, sample(controller_.lookup_delay, gen));
  }
  Duration worst{0};
  for (std::size_t i = 0; i < path_.configured_count; ++i) {
    auto gen = rng_.engine(Stream::kInstall, trial, packet_id, i);
    const Duration d = sample(path_.switches[i].install_delay(), gen);
    out.install_delays.push_back(d);
    worst = std::max(worst, d);
    FlowTable& table = tables_[i];
    const std::size_t needed = (table.contains(key) ? 0 : 1) + (table.contains(key.reversed()) ? 0 : 1);
    if (!table.has_room(needed)) {
      out.full_switches.push_back(i);
      continue;
    }
    table.insert(key);
    table.insert(key.reversed());
  }
  out.penalty = out.lookup + worst;
  pending_[key] = Pending{now + out.penalty, out.penalty};
  return out;
}

Duration Simulator::cross_traffic(Direction dir, std::size_t link, Timestamp t) {
  const LinkSpec& l = dir == Direction::kForward ? path_.forward_links[link] : path_.reverse_links[link];
  if (!l.cross_traffic.enabled()) return Duration{0};
  if (l.cross_traffic.kind == CrossTrafficModel::Kind::kConstant) return l.cross_traffic.mean;
  const std::int64_t epoch = floor_div(t.time_since_epoch().count(), l.cross_traffic.coherence.count());
  const auto key = std::make_tuple(dir_index(dir), link, epoch);
  auto it = cross_cache_.find(key);
  if (it != cross_cache_.end()) return it->second;
  auto gen = rng_.engine(Stream::kCrossTraffic, dir_index(dir), link, epoch);
  const Duration q = std::max(Duration{0}, l.cross_traffic.sample(gen));
  cross_cache_.emplace(key, q);
  return q;
}

double Simulator::drift_knot_ms(Direction dir, std::size_t link, std::int64_t knot) {
  const auto key = std::make_tuple(dir_index(dir), link, knot);
  auto it = drift_cache_.find(key);
  if (it != drift_cache_.end()) return it->second;
  const LinkSpec& l = dir == Direction::kForward ? path_.forward_links[link] : path_.reverse_links[link];
  auto gen = rng_.engine(Stream::kDrift, dir_index(dir), link, knot);
  const double v = sample_ms(NormalDelay{Duration{0}, l.drift->sd}, gen);
  drift_cache_.emplace(key, v);
  return v;
}

Duration Simulator::drift(Direction dir, std::size_t link, Timestamp t) {
  const LinkSpec& l = dir == Direction::kForward ? path_.forward_links[link] : path_.reverse_links[link];
  if (!l.drift || l.drift->sd.count() == 0) return Duration{0};
  const std::int64_t ns = t.time_since_epoch().count();
  const std::int64_t period = l.drift->period.count();
  const std::int64_t knot = floor_div(ns, period);
  const double frac = static_cast<double>(ns - knot * period) / static_cast<double>(period);
  const double a = drift_knot_ms(dir, link, knot);
  const double b = drift_knot_ms(dir, link, knot + 1);
  return from_ms(a + (b - a) * frac);
}

Duration Simulator::jitter(const Packet& p, Direction dir, std::size_t link) const {
  const LinkSpec& l = dir == Direction::kForward ? path_.forward_links[link] : path_.reverse_links[link];
  if (l.jitter_sd.count() == 0) return Duration{0};
  auto gen = rng_.engine(Stream::kJitter, p.trial, p.id, dir_index(dir), link);
  return sample(NormalDelay{Duration{0}, l.jitter_sd}, gen);
}

std::vector<PacketTimeline> Simulator::run(std::span<const Packet> packets) {
  return run_mode(packets, Mode::kExchange);
}

std::vector<PacketTimeline> Simulator::run_mode(std::span<const Packet> packets, Mode mode) {
  std::vector<PacketTimeline> out(packets.size());
  std::vector<std::size_t> order(packets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (packets[a].sent_at != packets[b].sent_at) return packets[a].sent_at < packets[b].sent_at;
    return packets[a].id < packets[b].id;
  });

  std::priority_queue<Event, std::vector<Event>, Later> queue;
  std::uint64_t seq = 0;
  auto schedule = [&](Event e) {
    if (e.t < now_) throw std::logic_error("event scheduled into the past");
    e.seq = seq++;
    queue.push(e);
  };

  const Direction start_dir = mode == Mode::kReverseOnly ? Direction::kReverse : Direction::kForward;
  for (std::size_t idx : order) {
    const Packet& p = packets[idx];
    if (p.size == 0) throw std::invalid_argument("packet size must be > 0");
    out[idx].packet = p;
    schedule(Event{p.sent_at, 0, Event::Type::kArrive, idx, start_dir, 0});
  }

  const std::size_t n = path_.forward_links.size();
  const std::size_t m = path_.reverse_links.size();
  std::vector<bool> missed(packets.size(), false);

  while (!queue.empty()) {
    const Event ev = queue.top();
    queue.pop();
    now_ = ev.t;
    if (ev.type == Event::Type::kClear) {
      clear_flow_tables();
      continue;
    }
    PacketTimeline& tl = out[ev.packet];
    const Packet& p = tl.packet;

    if (ev.dir == Direction::kForward) {
      if (ev.node == n) {
        tl.server_recv = ev.t;
        if (p.kind == PacketKind::kClear)
          schedule(Event{ev.t + controller_.clear_delay, 0, Event::Type::kClear, ev.packet, ev.dir, 0});
        if (mode == Mode::kExchange) {
          tl.reply_sent = ev.t + path_.server_turnaround;
          schedule(Event{*tl.reply_sent, 0, Event::Type::kArrive, ev.packet, Direction::kReverse, 0});
        }
        continue;
      }
      Timestamp a = ev.t;
      Duration hold{0};
      const int sw = switch_at_hop_[ev.node];
      if (sw >= 0 && static_cast<std::size_t>(sw) < path_.configured_count) {
        FlowTable& table = tables_[static_cast<std::size_t>(sw)];
        if (table.contains(p.key)) {
          auto pend = pending_.find(p.key);
          if (!missed[ev.packet] && pend != pending_.end() && pend->second.installed_at > a) {
            tl.held = true;
            hold = pend->second.penalty;
          }
        } else if (!missed[ev.packet]) {
          missed[ev.packet] = true;
          const MissOutcome mo = handle_table_miss(p.key, a, p.trial, p.id);
          tl.miss = true;
          tl.table_full = mo.table_full();
          tl.install_penalty = mo.penalty;
          hold = mo.penalty;
        }
      }
      if (sw == 0 && element_ && p.kind != PacketKind::kClear) {
        if (tl.miss || tl.held) {
          element_->touch(p.key, a);
        } else {
          const auto adm = element_->admit(p, a);
          tl.element_delayed = adm.delayed;
          tl.element_delay = adm.release - a;
          a = adm.release;
        }
      }
      const LinkSpec& link = path_.forward_links[ev.node];
      Timestamp& busy = busy_until_[0][ev.node];
      const Timestamp start = std::max(a + cross_traffic(Direction::kForward, ev.node, a), busy) + hold;
      busy = start + transmission_delay(p.size, link);
      if (link.loss > 0.0 && rng_.uniform(Stream::kLoss, p.trial, p.id, 0, ev.node) < link.loss) {
        tl.dropped = true;
        continue;
      }
      Timestamp arrive = std::max(busy, busy + link.base_latency + drift(Direction::kForward, ev.node, busy) +
                                            jitter(p, Direction::kForward, ev.node));
      Timestamp& last = last_arrival_[0][ev.node];
      if (!link.reorder) arrive = std::max(arrive, last);
      last = std::max(last, arrive);
      tl.forward_hops.push_back(arrive);
      schedule(Event{arrive, 0, Event::Type::kArrive, ev.packet, Direction::kForward, ev.node + 1});
    } else {
      if (ev.node == m) {
        tl.client_recv = ev.t;
        continue;
      }
      const Bytes size = mode == Mode::kReverseOnly ? p.size : path_.reply_size;
      const LinkSpec& link = path_.reverse_links[ev.node];
      Timestamp& busy = busy_until_[1][ev.node];
      const Timestamp start = std::max(ev.t + cross_traffic(Direction::kReverse, ev.node, ev.t), busy);
      busy = start + transmission_delay(size, link);
      if (link.loss > 0.0 && rng_.uniform(Stream::kLoss, p.trial, p.id, 1, ev.node) < link.loss) {
        tl.dropped = true;
        continue;
      }
      Timestamp arrive = std::max(busy, busy + link.base_latency + drift(Direction::kReverse, ev.node, busy) +
                                            jitter(p, Direction::kReverse, ev.node));
      Timestamp& last = last_arrival_[1][ev.node];
      if (!link.reorder) arrive = std::max(arrive, last);
      last = std::max(last, arrive);
      tl.reverse_hops.push_back(arrive);
      schedule(Event{arrive, 0, Event::Type::kArrive, ev.packet, Direction::kReverse, ev.node + 1});
    }
  }
  return out;
}

std::vector<Timestamp> Simulator::forward_packet(const Packet& packet, Direction direction) {
  const Packet one[] = {packet};
  auto tl = run_mode(one, direction == Direction::kForward ? Mode::kForwardOnly : Mode::kReverseOnly);
  return direction == Direction::kForward ? tl[0].forward_hops : tl[0].reverse_hops;
}

ExchangeResult Simulator::simulate_exchange(const Packet& packet) {
  const Packet one[] = {packet};
  auto tl = run(one);
  ExchangeResult r{tl[0], tl[0].rtt()};
  return r;
}

PairResult Simulator::simulate_pair(const Packet& first, const Packet& second) {
  if (!(first.key == second.key)) throw std::invalid_argument("pair members must share a flow key");
  const Packet two[] = {first, second};
  auto tl = run(two);
  PairResult r;
  r.first = tl[0];
  r.second = tl[1];
  if (tl[0].server_recv && tl[1].server_recv) r.server_dispersion = *tl[1].server_recv - *tl[0].server_recv;
  if (tl[0].client_recv && tl[1].client_recv) r.reply_dispersion = *tl[1].client_recv - *tl[0].client_recv;
  r.rtt_first = tl[0].rtt();
  r.rtt_second = tl[1].rtt();
  return r;
}

std::vector<PacketTimeline> simulate(const PathSpec& path, const ControllerSpec& controller, std::uint64_t seed,
                                     std::span<const Packet> packets) {
  Simulator sim(path, controller, seed);
  return sim.run(packets);
}

}  // namespace sdnfp
