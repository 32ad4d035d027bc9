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


#include "sdnfp/defense/delay_element.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sdnfp {

void DelayElementConfig::validate() const {
  if (window.count() <= 0) throw std::invalid_argument("window must be > 0");
  if (t_th <= window) throw std::invalid_argument("t_th must exceed window");
  sdnfp::validate(first_delay);
  sdnfp::validate(followup_delay);
  for (const auto& [k, p] : per_k) {
    sdnfp::validate(p.first);
    sdnfp::validate(p.followup);
  }
}

const GPDParams& DelayElementConfig::first_for(std::size_t k) const {
  auto it = per_k.find(k);
  return it == per_k.end() ? first_delay : it->second.first;
}

const GPDParams& DelayElementConfig::followup_for(std::size_t k) const {
  auto it = per_k.find(k);
  return it == per_k.end() ? followup_delay : it->second.followup;
}

const FlowActivityEntry* FlowActivity::find(const FlowKey& key) const {
  auto it = flows_.find(key);
  return it == flows_.end() ? nullptr : &it->second;
}

FlowActivityEntry* FlowActivity::find(const FlowKey& key) {
  auto it = flows_.find(key);
  return it == flows_.end() ? nullptr : &it->second;
}

FlowActivityEntry& FlowActivity::insert(const FlowKey& key, Timestamp now) {
  auto [it, fresh] = flows_.try_emplace(key, FlowActivityEntry{now, std::nullopt});
  return it->second;
}

void FlowActivity::touch(const FlowKey& key, Timestamp now) {
  auto [it, fresh] = flows_.try_emplace(key, FlowActivityEntry{now, std::nullopt});
  if (!fresh) it->second.last_seen = std::max(it->second.last_seen, now);
}

BucketDecision select_bucket(const FlowKey& key, Timestamp now, FlowActivity& activity,
                             const DelayElementConfig& cfg) {
  FlowActivityEntry* e = activity.find(key);
  if (e == nullptr) {
    FlowActivityEntry& fresh = activity.insert(key, now);
    fresh.window_until = now + cfg.window;
    return {Bucket::kDelayed, DelayPosition::kFirst};
  }
  const bool inactive = now - e->last_seen > cfg.t_th;
  e->last_seen = std::max(e->last_seen, now);
  if (inactive) {
    e->window_until = now + cfg.window;
    return {Bucket::kDelayed, DelayPosition::kFirst};
  }
  if (e->window_until && now < *e->window_until) return {Bucket::kDelayed, DelayPosition::kFollowup};
  return {Bucket::kFast, DelayPosition::kFirst};
}

Duration delay_for(DelayPosition position, const DelayElementConfig& cfg, std::mt19937_64& gen, std::size_t k) {
  const GPDParams& p = position == DelayPosition::kFirst ? cfg.first_for(k) : cfg.followup_for(k);
  return from_ms(std::max(0.0, gpd_sample(p, gen)));
}

PathSpec apply_delay_element(PathSpec path, const DelayElementConfig& cfg) {
  if (path.switches.empty()) throw std::invalid_argument("delay element needs at least one switch");
  cfg.validate();
  path.delay_element = cfg;
  return path;
}

DelayElement::DelayElement(DelayElementConfig cfg, std::size_t k, KeyedRng rng)
    : cfg_(std::move(cfg)), k_(k), rng_(rng) {}

DelayElement::Admission DelayElement::admit(const Packet& packet, Timestamp arrival) {
  const BucketDecision d = select_bucket(packet.key, arrival, activity_, cfg_);
  auto [it, fresh] = last_release_.try_emplace(packet.key, arrival);
  Timestamp release = std::max(arrival, it->second);
  if (d.bucket == Bucket::kDelayed) {
    auto gen = rng_.engine(Stream::kElement, packet.trial, packet.id);
    release += delay_for(d.position, cfg_, gen, k_);
  }
  it->second = release;
  return {release, d.bucket == Bucket::kDelayed};
}

}  // namespace sdnfp
