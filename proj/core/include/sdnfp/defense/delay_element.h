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


#ifndef SDNFP_DEFENSE_DELAY_ELEMENT_H_
#define SDNFP_DEFENSE_DELAY_ELEMENT_H_

#include <cstddef>
#include <optional>
#include <random>
#include <unordered_map>

#include "sdnfp/defense/config.h"
#include "sdnfp/netsim/flow.h"
#include "sdnfp/netsim/path.h"
#include "sdnfp/netsim/rng.h"
#include "sdnfp/units.h"

namespace sdnfp {

enum class Bucket { kFast, kDelayed };
enum class DelayPosition { kFirst, kFollowup };

struct BucketDecision {
  Bucket bucket = Bucket::kFast;
  DelayPosition position = DelayPosition::kFirst;
};

struct FlowActivityEntry {
  Timestamp last_seen{};
  std::optional<Timestamp> window_until;
};

/// Per-flow activity seen by the outermost switch.
class FlowActivity {
 public:
  const FlowActivityEntry* find(const FlowKey& key) const;
  FlowActivityEntry* find(const FlowKey& key);
  FlowActivityEntry& insert(const FlowKey& key, Timestamp now);
  /// Records a packet without a bucket decision.
  void touch(const FlowKey& key, Timestamp now);
  std::size_t size() const { return flows_.size(); }

 private:
  std::unordered_map<FlowKey, FlowActivityEntry, FlowKeyHash> flows_;
};

/// Delayed iff the flow was never seen, has been idle longer than t_th, or
/// is inside the window opened by its last reactivation. Updates activity.
BucketDecision select_bucket(const FlowKey& key, Timestamp now, FlowActivity& activity,
                             const DelayElementConfig& cfg);

/// GPD delay for the given position, clamped at 0. `k` picks per-k params.
Duration delay_for(DelayPosition position, const DelayElementConfig& cfg, std::mt19937_64& gen,
                   std::size_t k = 0);

/// Returns `path` with the element attached to its outermost switch.
/// Throws std::invalid_argument if the path has no switch.
PathSpec apply_delay_element(PathSpec path, const DelayElementConfig& cfg);

/// Runtime state of the element inside one simulator. Each flow has a
/// FIFO line, so a delayed packet is never overtaken by a later one.
class DelayElement {
 public:
  struct Admission {
    Timestamp release;
    bool delayed = false;
  };

  DelayElement(DelayElementConfig cfg, std::size_t k, KeyedRng rng);

  /// A packet that hit an installed rule.
  Admission admit(const Packet& packet, Timestamp arrival);
  /// A packet that bypasses the buckets (miss, held) but counts as activity.
  void touch(const FlowKey& key, Timestamp arrival) { activity_.touch(key, arrival); }

  FlowActivity& activity() { return activity_; }
  const DelayElementConfig& config() const { return cfg_; }

 private:
  DelayElementConfig cfg_;
  std::size_t k_;
  KeyedRng rng_;
  FlowActivity activity_;
  std::unordered_map<FlowKey, Timestamp, FlowKeyHash> last_release_;
};

}  // namespace sdnfp

#endif  // SDNFP_DEFENSE_DELAY_ELEMENT_H_
