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


#include "sdnfp/probes/passive.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace sdnfp {

std::vector<PassivePair> extract_passive_pairs(std::span<const TraceRecord> trace, Duration window) {
  if (window.count() <= 0) throw std::invalid_argument("window must be > 0");
  std::vector<std::size_t> order(trace.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return trace[a].client_send < trace[b].client_send; });

  std::unordered_map<FlowKey, std::size_t, FlowKeyHash> open;
  std::vector<PassivePair> out;
  for (std::size_t idx : order) {
    const TraceRecord& r = trace[idx];
    if (r.kind == PacketKind::kClear) continue;
    auto it = open.find(r.flow);
    if (it == open.end()) {
      open.emplace(r.flow, idx);
      continue;
    }
    const Duration gap = r.client_send - trace[it->second].client_send;
    if (gap.count() > 0 && gap <= window) {
      out.push_back({it->second, idx, gap});
      open.erase(it);
    } else {
      it->second = idx;
    }
  }
  return out;
}

}  // namespace sdnfp
