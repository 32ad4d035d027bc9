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


#ifndef SDNFP_PROBES_PASSIVE_H_
#define SDNFP_PROBES_PASSIVE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "sdnfp/probes/trace.h"
#include "sdnfp/units.h"

namespace sdnfp {

/// Two same-flow packets, as indices into the source trace.
struct PassivePair {
  std::size_t first = 0;
  std::size_t second = 0;
  Duration gap{0};
};

/// Greedy left-to-right pairing of consecutive same-flow packets (CLEAR
/// excluded) whose send gap is in (0, window]. No packet is used twice.
/// Throws std::invalid_argument if window <= 0.
std::vector<PassivePair> extract_passive_pairs(std::span<const TraceRecord> trace, Duration window);

}  // namespace sdnfp

#endif  // SDNFP_PROBES_PASSIVE_H_
