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


#ifndef SDNFP_DEFENSE_CONFIG_H_
#define SDNFP_DEFENSE_CONFIG_H_

#include <chrono>
#include <cstddef>
#include <map>

#include "sdnfp/stats/gpd.h"
#include "sdnfp/units.h"

namespace sdnfp {

/// GPD pair for one configured-switch count.
struct DelayParamsPair {
  GPDParams first;
  GPDParams followup;
};

struct DelayElementConfig {
  Duration t_th = std::chrono::milliseconds(500);
  Duration window = std::chrono::milliseconds(100);
  /// Delay of the first packet of a reactivated flow (mimics an install).
  GPDParams first_delay{-0.53, 10.58, 0.57};
  /// Delay of follow-up packets inside the window (mimics dispersion).
  GPDParams followup_delay{-0.60, 2.86, 0.45};
  /// Optional per-k overrides (fine-grained mode).
  std::map<std::size_t, DelayParamsPair> per_k;

  /// Throws std::invalid_argument unless t_th > window > 0 and params valid.
  void validate() const;

  const GPDParams& first_for(std::size_t k) const;
  const GPDParams& followup_for(std::size_t k) const;
};

}  // namespace sdnfp

#endif  // SDNFP_DEFENSE_CONFIG_H_
