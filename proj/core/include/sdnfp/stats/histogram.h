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


#ifndef SDNFP_STATS_HISTOGRAM_H_
#define SDNFP_STATS_HISTOGRAM_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <span>

#include "sdnfp/units.h"

namespace sdnfp {

/// Fixed-width histogram; value v falls in bin floor((v - origin) / width).
struct Histogram {
  Duration bin_width{100'000};
  Duration origin{0};
  std::map<std::int64_t, std::uint64_t> counts;
  std::uint64_t total = 0;

  std::int64_t bin_of(Duration v) const;
  Duration bin_left(std::int64_t bin) const { return origin + bin * bin_width; }
};

/// Throws EmptySamples on an empty input and std::invalid_argument on a
/// non-positive width.
Histogram build_histogram(std::span<const Duration> samples, Duration bin_width, Duration origin = Duration{0});

/// CSV with header "bin_left_ms,count,relative_frequency"; one row per
/// occupied bin, ascending.
void write_histogram_csv(std::ostream& os, const Histogram& h);

}  // namespace sdnfp

#endif  // SDNFP_STATS_HISTOGRAM_H_
