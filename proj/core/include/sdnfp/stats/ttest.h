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


#ifndef SDNFP_STATS_TTEST_H_
#define SDNFP_STATS_TTEST_H_

#include <span>

namespace sdnfp {

struct TTestResult {
  double t = 0.0;   // (mean_y - mean_n) / standard error
  double df = 0.0;  // Welch-Satterthwaite
  double p_value = 1.0;
  bool significant_at_1pct = false;
};

/// Two-sided unequal-variance t-test. Throws DegenerateVariance if either
/// population has fewer than 2 samples or zero variance.
TTestResult welch_t_test(std::span<const double> samples_n, std::span<const double> samples_y);

}  // namespace sdnfp

#endif  // SDNFP_STATS_TTEST_H_
