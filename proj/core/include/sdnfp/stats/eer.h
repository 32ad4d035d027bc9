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


#ifndef SDNFP_STATS_EER_H_
#define SDNFP_STATS_EER_H_

#include <span>
#include <string_view>
#include <vector>

#include "sdnfp/units.h"

namespace sdnfp {

/// Y: the measurement triggered rule installation. N: it did not.
enum class Label { kN, kY };

std::string_view to_string(Label l);
Label parse_label(std::string_view text);

struct EERPoint {
  double threshold;
  double fmr;  // |Y < t| / |Y|
  double fnr;  // |N >= t| / |N|
};

struct EERResult {
  double eer = 0.0;
  double threshold = 0.0;
  std::vector<EERPoint> curve;
};

/// Sweeps thresholds over the sorted union of both populations plus one
/// sentinel above the maximum and returns the FMR/FNR crossing, linearly
/// interpolated between adjacent sweep points. Values below the threshold
/// are classified N. Throws EmptySamples if either population is empty.
EERResult compute_eer(std::span<const double> samples_n, std::span<const double> samples_y,
                      bool keep_curve = true);
/// Duration overload; values and threshold in ms.
EERResult compute_eer(std::span<const Duration> samples_n, std::span<const Duration> samples_y,
                      bool keep_curve = true);

inline Label classify(double value, double threshold) { return value < threshold ? Label::kN : Label::kY; }

}  // namespace sdnfp

#endif  // SDNFP_STATS_EER_H_
