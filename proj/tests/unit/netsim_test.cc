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


#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "sdnfp/errors.h"
#include "sdnfp/netsim/distribution.h"
#include "sdnfp/netsim/flow.h"
#include "sdnfp/netsim/path.h"
#include "sdnfp/netsim/rng.h"
#include "sdnfp/netsim/simulator.h"

namespace sdnfp {
namespace {

using std::chrono::milliseconds;
using std::chrono::seconds;

const FlowKey kFlow{0x0A000001, 0x0A000101, 40000, 7, 17};

LinkSpec link(Bandwidth cap, Duration latency = Duration{0}) {
  LinkSpec l;
  l.capacity = cap;
  l.base_latency = latency;
  return l;
}

Packet probe(std::uint64_t id, Timestamp at, Bytes size = 1500, FlowKey key = kFlow) {
  Packet p;
  p.id = id;
  p.key = key;
  p.size = size;
  p.kind = PacketKind::kProbe;
  p.sent_at = at;
  return p;
}

Timestamp t_ms(double ms) { return Timestamp{from_ms(ms)}; }

// n + 1 links with one switch per listed install delay, on hops 1..n.
PathSpec switched_path(std::vector<Duration> installs, Bandwidth cap = megabits_per_second(100)) {
  PathSpec p;
  const std::size_t n = installs.size();
  for (std::size_t i = 0; i <= n; ++i) p.forward_links.push_back(link(cap));
  for (std::size_t i = 0; i <= n; ++i) p.reverse_links.push_back(link(cap));
  for (std::size_t i = 0; i < n; ++i)
    p.switches.emplace_back("s" + std::to_string(i), SwitchKind::kHardware, i + 1, ConstantDelay{installs[i]});
  p.configured_count = n;
  return p;
}

TEST(TransmissionDelay, SpecExamples) {
  EXPECT_EQ(transmission_delay(1500, megabits_per_second(100)), Duration{120'000});
  EXPECT_EQ(transmission_delay(1500, gigabits_per_second(1)), Duration{12'000});
  EXPECT_EQ(transmission_delay(64, megabits_per_second(100)), Duration{5'120});
  // 1 B at 3 bps = 2.666.. s, rounded half-up to the ns.
  EXPECT_EQ(transmission_delay(1, Bandwidth{3}), Duration{2'666'666'667});
}

TEST(FlowKey, RoundTripAndReverse) {
  EXPECT_EQ(kFlow.to_string(), "10.0.0.1:40000>10.0.1.1:7/17");
  EXPECT_EQ(FlowKey::parse(kFlow.to_string()), kFlow);
  EXPECT_EQ(kFlow.reversed().reversed(), kFlow);
  EXPECT_NE(kFlow.reversed(), kFlow);
  EXPECT_THROW(FlowKey::parse("10.0.0.1:40000>10.0.1.1:7"), std::invalid_argument);
  EXPECT_THROW(FlowKey::parse("10.0.0.256:1>10.0.1.1:7/17"), std::invalid_argument);
  EXPECT_NE(FlowKeyHash{}(kFlow), FlowKeyHash{}(kFlow.reversed()));
}

TEST(FlowTable, CapacityAndMembership) {
  FlowTable t(2);
  EXPECT_EQ(t.insert(kFlow), FlowTable::InsertResult::kInserted);
  EXPECT_EQ(t.insert(kFlow), FlowTable::InsertResult::kPresent);
  EXPECT_EQ(t.insert(kFlow.reversed()), FlowTable::InsertResult::kInserted);
  FlowKey other = kFlow;
  other.src_port = 1;
  EXPECT_EQ(t.insert(other), FlowTable::InsertResult::kFull);
  EXPECT_TRUE(t.contains(kFlow));
  EXPECT_FALSE(t.contains(other));
  EXPECT_LE(t.size(), t.capacity());
  t.clear();
  EXPECT_FALSE(t.contains(kFlow));
}

TEST(KeyedRng, SameKeysSameDraw) {
  KeyedRng r(7);
  EXPECT_EQ(r.uniform(Stream::kJitter, 1, 2), r.uniform(Stream::kJitter, 1, 2));
  EXPECT_NE(r.uniform(Stream::kJitter, 1, 2), r.uniform(Stream::kJitter, 2, 1));
  EXPECT_NE(r.uniform(Stream::kJitter, 1, 2), r.uniform(Stream::kInstall, 1, 2));
  EXPECT_NE(r.uniform(Stream::kJitter, 1, 2), KeyedRng(8).uniform(Stream::kJitter, 1, 2));
}

TEST(Distribution, ParetoMatchesMoments) {
  // Monte-Carlo check of the moment parameterization.
  const ParetoDelay d{milliseconds(20), 4.0};
  std::mt19937_64 gen(1);
  double s = 0, s2 = 0;
  const int n = 400'000;
  for (int i = 0; i < n; ++i) {
    const double v = sample_ms(d, gen);
    ASSERT_GT(v, 0.0);
    s += v;
    s2 += v * v;
  }
  const double mean = s / n;
  EXPECT_NEAR(mean, 20.0, 0.05);
  EXPECT_NEAR(s2 / n - mean * mean, 4.0, 0.4);
  EXPECT_DOUBLE_EQ(mean_ms(d), 20.0);
}

TEST(Distribution, LogNormalMedianAndPositivity) {
  const LogNormalDelay d{milliseconds(2), 0.6};
  std::mt19937_64 gen(3);
  std::vector<double> v;
  for (int i = 0; i < 20001; ++i) v.push_back(sample_ms(d, gen));
  std::nth_element(v.begin(), v.begin() + 10000, v.end());
  EXPECT_NEAR(v[10000], 2.0, 0.05);
  EXPECT_TRUE(is_nonnegative(d, true));
  EXPECT_FALSE(is_nonnegative(ConstantDelay{Duration{0}}, true));
  EXPECT_TRUE(is_nonnegative(ConstantDelay{Duration{0}}, false));
  EXPECT_FALSE(is_nonnegative(NormalDelay{milliseconds(1), milliseconds(1)}));
}

TEST(PathSpec, ValidatesAndPicksEarliestBottleneck) {
  PathSpec p;
  EXPECT_THROW(p.validate(), ConfigError);
  p.forward_links = {link(gigabits_per_second(1)), link(megabits_per_second(100)), link(megabits_per_second(100))};
  p.reverse_links = {link(gigabits_per_second(1))};
  p.validate();
  EXPECT_EQ(p.bottleneck_index(), 1u);
  p.configured_count = 1;
  EXPECT_THROW(p.validate(), ConfigError);
  p.switches.emplace_back("a", SwitchKind::kHardware, 3, ConstantDelay{milliseconds(1)});
  EXPECT_THROW(p.validate(), ConfigError);  // hop beyond path
  p.switches.clear();
  p.switches.emplace_back("a", SwitchKind::kHardware, 1, ConstantDelay{Duration{0}});
  EXPECT_THROW(p.validate(), ConfigError);  // install delay must be > 0
  try {
    p.validate();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "path.switches[0].install_delay");
  }
}

TEST(SwitchSpec, KindIsFixedAtConstruction) {
  const SwitchSpec s("x", SwitchKind::kSoftware, 0, ConstantDelay{milliseconds(1)});
  EXPECT_EQ(s.kind(), SwitchKind::kSoftware);
  EXPECT_EQ(parse_switch_kind("hw"), SwitchKind::kHardware);
  EXPECT_THROW(parse_switch_kind("optical"), std::invalid_argument);
}

TEST(ForwardPacket, SingleHop) {
  PathSpec p;
  p.forward_links = {link(megabits_per_second(100))};
  p.reverse_links = {link(megabits_per_second(100))};
  Simulator sim(p, {}, 1);
  const auto hops = sim.forward_packet(probe(0, t_ms(3)), Direction::kForward);
  ASSERT_EQ(hops.size(), 1u);
  EXPECT_EQ(hops[0], t_ms(3) + Duration{120'000});
}

TEST(ForwardPacket, TwoHopsWithConstantCrossTraffic) {
  PathSpec p;
  LinkSpec l = link(megabits_per_second(100));
  l.cross_traffic = CrossTrafficModel::constant(milliseconds(1));
  p.forward_links = {l, l};
  p.reverse_links = {l};
  Simulator sim(p, {}, 1);
  const auto hops = sim.forward_packet(probe(0, Timestamp{}), Direction::kForward);
  ASSERT_EQ(hops.size(), 2u);
  EXPECT_EQ(hops[1], Timestamp{} + Duration{2'240'000});
}

TEST(ForwardPacket, BackToBackPairIsSpacedByTransmissionDelay) {
  PathSpec p;
  p.forward_links = {link(megabits_per_second(100))};
  p.reverse_links = {link(megabits_per_second(100))};
  Simulator sim(p, {}, 1);
  const Packet pkts[] = {probe(0, Timestamp{}), probe(1, Timestamp{})};
  const auto tl = sim.run(pkts);
  EXPECT_EQ(*tl[1].server_recv - *tl[0].server_recv, Duration{120'000});
}

TEST(HandleTableMiss, PenaltyIsLookupPlusMaxInstall) {
  {
    Simulator sim(switched_path({milliseconds(2), milliseconds(3), milliseconds(5)}), {}, 1);
    const MissOutcome m = sim.handle_table_miss(kFlow, Timestamp{});
    EXPECT_EQ(m.penalty, milliseconds(5));
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_TRUE(sim.has_rule(i, kFlow));
      EXPECT_TRUE(sim.has_rule(i, kFlow.reversed()));
    }
  }
  {
    ControllerSpec c;
    c.lookup_delay = ConstantDelay{Duration{500'000}};
    Simulator sim(switched_path({milliseconds(4)}), c, 1);
    EXPECT_EQ(sim.handle_table_miss(kFlow, Timestamp{}).penalty, Duration{4'500'000});
  }
}

TEST(HandleTableMiss, SampledPenaltyReplaysWithSeed) {
  PathSpec p = switched_path({milliseconds(1), milliseconds(1)});
  for (std::size_t i = 0; i < 2; ++i) p.switches[i].set_install_delay(LogNormalDelay{milliseconds(2), 0.5});
  Simulator a(p, {}, 42), b(p, {}, 42), c(p, {}, 43);
  const MissOutcome ma = a.handle_table_miss(kFlow, Timestamp{}, 0, 9);
  const MissOutcome mb = b.handle_table_miss(kFlow, Timestamp{}, 0, 9);
  const MissOutcome mc = c.handle_table_miss(kFlow, Timestamp{}, 0, 9);
  ASSERT_EQ(ma.install_delays.size(), 2u);
  EXPECT_EQ(ma.penalty, std::max(ma.install_delays[0], ma.install_delays[1]));
  EXPECT_EQ(ma.penalty, mb.penalty);
  EXPECT_EQ(ma.install_delays, mb.install_delays);
  EXPECT_NE(ma.penalty, mc.penalty);
}

TEST(HandleTableMiss, FullTableIsFlaggedAndPacketStillForwarded) {
  PathSpec p = switched_path({milliseconds(1), milliseconds(1)});
  p.switches[1].set_table_capacity(1);
  Simulator sim(p, {}, 1);
  const auto r = sim.simulate_exchange(probe(0, Timestamp{}));
  EXPECT_TRUE(r.timeline.miss);
  EXPECT_TRUE(r.timeline.table_full);
  EXPECT_TRUE(r.rtt.has_value());
  EXPECT_TRUE(sim.has_rule(0, kFlow));
  EXPECT_FALSE(sim.has_rule(1, kFlow));
}

TEST(ClearFlowTables, EmptiesTablesAndRestoresMiss) {
  Simulator sim(switched_path({milliseconds(5)}), {}, 1);
  sim.clear_flow_tables();  // no-op on empty tables
  EXPECT_FALSE(sim.has_rule(0, kFlow));
  const auto first = sim.simulate_exchange(probe(0, Timestamp{}));
  EXPECT_TRUE(first.timeline.miss);
  const auto warm = sim.simulate_exchange(probe(1, t_ms(1000)));
  EXPECT_FALSE(warm.timeline.miss);
  EXPECT_EQ(*first.rtt - *warm.rtt, milliseconds(5));
  sim.clear_flow_tables();
  EXPECT_FALSE(sim.has_rule(0, kFlow));
  EXPECT_FALSE(sim.has_rule(0, kFlow.reversed()));
  const auto again = sim.simulate_exchange(probe(2, t_ms(2000)));
  EXPECT_TRUE(again.timeline.miss);
}

TEST(ClearFlowTables, ClearPacketEmptiesTablesAfterControllerDelay) {
  Simulator sim(switched_path({milliseconds(5)}), {}, 1);
  sim.preinstall(kFlow);
  Packet clear = probe(0, Timestamp{}, 64);
  clear.kind = PacketKind::kClear;
  const Packet pkts[] = {clear, probe(1, t_ms(1000))};
  const auto tl = sim.run(pkts);
  EXPECT_FALSE(tl[0].miss);
  EXPECT_TRUE(tl[1].miss);
}

TEST(SimulateExchange, RttMatchesTermByTerm) {
  PathSpec p;
  p.forward_links = {link(megabits_per_second(100))};
  p.reverse_links = {link(megabits_per_second(100))};
  Simulator sim(p, {}, 1);
  EXPECT_EQ(*sim.simulate_exchange(probe(0, Timestamp{})).rtt, Duration{120'000 + 5'120});

  // A switch on the single hop adds exactly its penalty to the first packet.
  p.switches.emplace_back("s", SwitchKind::kHardware, 0, ConstantDelay{milliseconds(5)});
  p.configured_count = 1;
  Simulator sim2(p, {}, 1);
  EXPECT_EQ(*sim2.simulate_exchange(probe(0, Timestamp{})).rtt, Duration{120'000 + 5'120} + milliseconds(5));
  EXPECT_EQ(*sim2.simulate_exchange(probe(1, t_ms(1000))).rtt, Duration{120'000 + 5'120});
}

TEST(SimulateExchange, TurnaroundAddsToRtt) {
  PathSpec p;
  p.forward_links = {link(megabits_per_second(100))};
  p.reverse_links = {link(megabits_per_second(100))};
  p.server_turnaround = milliseconds(2);
  Simulator sim(p, {}, 1);
  EXPECT_EQ(*sim.simulate_exchange(probe(0, Timestamp{})).rtt, Duration{125'120} + milliseconds(2));
}

TEST(SimulateExchange, ParetoCrossTrafficMeanRtt) {
  // Monte-Carlo: each of the n + m links adds 20 ms on average.
  PathSpec p;
  LinkSpec l = link(megabits_per_second(100));
  l.cross_traffic = CrossTrafficModel::testbed_pareto();
  p.forward_links = {l, l};
  p.reverse_links = {l, l, l};
  Simulator sim(p, {}, 11);
  PathSpec quiet = p;
  for (auto& q : quiet.forward_links) q.cross_traffic = {};
  for (auto& q : quiet.reverse_links) q.cross_traffic = {};
  const Duration base = *Simulator(quiet, {}, 11).simulate_exchange(probe(0, Timestamp{})).rtt;
  std::vector<Packet> pkts;
  for (int i = 0; i < 10'000; ++i) pkts.push_back(probe(static_cast<std::uint64_t>(i), Timestamp{seconds(i)}));
  double sum = 0;
  for (const auto& tl : sim.run(pkts)) sum += to_ms(*tl.rtt() - base);
  EXPECT_NEAR(sum / 10'000, 5 * 20.0, 5 * 20.0 * 0.05);
}

TEST(SimulatePair, DispersionWithoutCrossTraffic) {
  Simulator sim(switched_path({milliseconds(5)}), {}, 1);
  sim.preinstall(kFlow);
  const auto r = sim.simulate_pair(probe(0, Timestamp{}), probe(1, Timestamp{}));
  EXPECT_EQ(*r.server_dispersion, Duration{120'000});
  EXPECT_EQ(*r.reply_dispersion, Duration{120'000});
}

TEST(SimulatePair, MissPenaltyHoldsSecondPacket) {
  Simulator sim(switched_path({milliseconds(5)}), {}, 1);
  const auto r = sim.simulate_pair(probe(0, Timestamp{}), probe(1, Timestamp{}));
  EXPECT_TRUE(r.first.miss);
  EXPECT_FALSE(r.second.miss);
  EXPECT_TRUE(r.second.held);
  EXPECT_EQ(*r.server_dispersion, Duration{120'000} + milliseconds(5));
  EXPECT_EQ(*r.reply_dispersion, Duration{120'000} + milliseconds(5));
  EXPECT_EQ(*r.rtt_second - *r.rtt_first, Duration{120'000} + milliseconds(5));
}

TEST(SimulatePair, ReorderedRepliesGiveNegativeDispersion) {
  PathSpec p;
  p.forward_links = {link(megabits_per_second(100))};
  LinkSpec rev = link(megabits_per_second(100), milliseconds(5));
  rev.jitter_sd = milliseconds(1);
  rev.reorder = true;
  p.reverse_links = {rev};
  int negative = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Simulator sim(p, {}, seed);
    const auto r = sim.simulate_pair(probe(0, Timestamp{}), probe(1, Timestamp{}));
    EXPECT_EQ(*r.server_dispersion, Duration{120'000});
    if (r.reply_dispersion->count() < 0) ++negative;
  }
  EXPECT_GT(negative, 5);
}

TEST(SimulatePair, OrderPreservingJitterNeverReorders) {
  PathSpec p;
  LinkSpec l = link(megabits_per_second(100), milliseconds(5));
  l.jitter_sd = milliseconds(1);
  p.forward_links = {l};
  p.reverse_links = {l};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Simulator sim(p, {}, seed);
    const auto r = sim.simulate_pair(probe(0, Timestamp{}), probe(1, Timestamp{}));
    EXPECT_GE(r.server_dispersion->count(), 0);
    EXPECT_GE(r.reply_dispersion->count(), 0);
  }
}

TEST(SimulatorInvariants, MonotoneTime) {
  PathSpec p = switched_path({milliseconds(2), milliseconds(3)});
  for (auto& l : p.forward_links) {
    l.base_latency = milliseconds(1);
    l.jitter_sd = milliseconds(2);
    l.cross_traffic = CrossTrafficModel::pareto(milliseconds(1), 0.25);
    l.drift = DriftModel{milliseconds(3), seconds(1)};
  }
  for (auto& l : p.reverse_links) {
    l.jitter_sd = milliseconds(2);
    l.reorder = true;
  }
  Simulator sim(p, {}, 5);
  std::vector<Packet> pkts;
  for (int i = 0; i < 200; ++i) pkts.push_back(probe(static_cast<std::uint64_t>(i), t_ms(i * 0.7)));
  for (const auto& tl : sim.run(pkts)) {
    Timestamp prev = tl.packet.sent_at;
    for (Timestamp t : tl.forward_hops) {
      EXPECT_GE(t, prev);
      prev = t;
    }
    ASSERT_TRUE(tl.server_recv);
    EXPECT_EQ(*tl.server_recv, tl.forward_hops.back());
    EXPECT_GE(*tl.reply_sent, *tl.server_recv);
    prev = *tl.reply_sent;
    for (Timestamp t : tl.reverse_hops) {
      EXPECT_GE(t, prev);
      prev = t;
    }
    EXPECT_EQ(*tl.client_recv, tl.reverse_hops.back());
  }
}

TEST(SimulatorInvariants, RefusesToGoBackInTime) {
  Simulator sim(switched_path({milliseconds(1)}), {}, 1);
  sim.simulate_exchange(probe(0, t_ms(1000)));
  EXPECT_THROW(sim.simulate_exchange(probe(1, Timestamp{})), std::logic_error);
}

TEST(SimulatorInvariants, DispersionEqualsBottleneckTransmissionOnRandomPaths) {
  // Property: zero cross traffic, warm or no switches, any path shape.
  std::mt19937_64 gen(2024);
  const std::uint64_t caps[] = {10'000'000, 100'000'000, 155'000'000, 1'000'000'000, 10'000'000'000};
  for (int trial = 0; trial < 200; ++trial) {
    PathSpec p;
    const int n = 1 + static_cast<int>(gen() % 6);
    for (int i = 0; i < n; ++i)
      p.forward_links.push_back(link(Bandwidth{caps[gen() % 5]}, Duration{static_cast<std::int64_t>(gen() % 20'000'000)}));
    p.reverse_links.push_back(link(Bandwidth{caps[gen() % 5]}));
    for (int i = 1; i < n; ++i)
      if (gen() % 2) p.switches.emplace_back("s", SwitchKind::kHardware, static_cast<std::size_t>(i), ConstantDelay{milliseconds(3)});
    p.configured_count = p.switches.size();
    const Bytes size = static_cast<Bytes>(64 + gen() % 1437);
    Simulator sim(p, {}, static_cast<std::uint64_t>(trial));
    sim.preinstall(kFlow);
    const Timestamp at{Duration{static_cast<std::int64_t>(gen() % 1'000'000'000)}};
    const auto r = sim.simulate_pair(probe(0, at, size), probe(1, at, size));
    EXPECT_EQ(*r.server_dispersion, transmission_delay(size, p.bottleneck_capacity())) << "trial " << trial;
  }
}

TEST(SimulatorInvariants, InstallDelayAdditivity) {
  const std::vector<Duration> base{milliseconds(2), milliseconds(3), milliseconds(5)};
  auto rtt = [](const std::vector<Duration>& installs) {
    Simulator sim(switched_path(installs), {}, 1);
    return *sim.simulate_exchange(probe(0, Timestamp{})).rtt;
  };
  const Duration r0 = rtt(base);
  const Duration c = Duration{700'000};
  // Adding c to the max switch shifts RTT by c; to a non-max switch by less.
  EXPECT_EQ(rtt({base[0], base[1], base[2] + c}) - r0, c);
  EXPECT_EQ(rtt({base[0] + c, base[1], base[2]}) - r0, Duration{0});
  EXPECT_EQ(rtt({base[0], base[1] + milliseconds(3), base[2]}) - r0, milliseconds(1));
}

TEST(SimulatorInvariants, DeterministicTimelines) {
  PathSpec p = switched_path({milliseconds(2), milliseconds(3)});
  for (auto& l : p.forward_links) {
    l.jitter_sd = milliseconds(1);
    l.cross_traffic = CrossTrafficModel::pareto(milliseconds(1), 0.25);
  }
  p.switches[0].set_install_delay(LogNormalDelay{milliseconds(2), 0.5});
  std::vector<Packet> pkts;
  for (int i = 0; i < 50; ++i) pkts.push_back(probe(static_cast<std::uint64_t>(i), t_ms(i * 3.0)));
  const auto a = simulate(p, {}, 9, pkts);
  const auto b = simulate(p, {}, 9, pkts);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].server_recv, b[i].server_recv);
    EXPECT_EQ(a[i].client_recv, b[i].client_recv);
    EXPECT_EQ(a[i].miss, b[i].miss);
  }
}

TEST(SimulatorInvariants, InstalledRuleMeansNoFurtherPenalty) {
  Simulator sim(switched_path({milliseconds(4), milliseconds(1)}), {}, 1);
  const auto a = sim.simulate_exchange(probe(0, Timestamp{}));
  const auto b = sim.simulate_exchange(probe(1, t_ms(100)));
  const auto c = sim.simulate_exchange(probe(2, t_ms(200)));
  EXPECT_TRUE(a.timeline.miss);
  EXPECT_FALSE(b.timeline.miss);
  EXPECT_FALSE(b.timeline.held);
  EXPECT_EQ(*b.rtt, *c.rtt);
  EXPECT_EQ(*a.rtt - *b.rtt, milliseconds(4));
}

TEST(SimulatorLoss, DroppedPacketsHaveNoReply) {
  PathSpec p;
  LinkSpec l = link(megabits_per_second(100));
  l.loss = 0.5;
  p.forward_links = {l};
  p.reverse_links = {link(megabits_per_second(100))};
  Simulator sim(p, {}, 3);
  std::vector<Packet> pkts;
  for (int i = 0; i < 1000; ++i) pkts.push_back(probe(static_cast<std::uint64_t>(i), Timestamp{milliseconds(i)}));
  int dropped = 0;
  for (const auto& tl : sim.run(pkts)) {
    if (tl.dropped) {
      ++dropped;
      EXPECT_FALSE(tl.client_recv);
    }
  }
  EXPECT_NEAR(dropped, 500, 60);
}

}  // namespace
}  // namespace sdnfp
