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


#include "sdnfp/stats/histogram.h"

#include <cstdio>
#include <stdexcept>

#include "sdnfp/errors.h"

namespace sdnfp {

std::int64_t Histogram::bin_of(Duration v) const {
  const std::int64_t num = (v - origin).count();
  const std::int64_t w = bin_width.count();
  std::int64_t q = num / w;
  if (num % w != 0 && num < 0) --q;
  return q;
}

Histogram build_histogram(std::span<const Duration> samples, Duration bin_width, Duration origin) {
  if (bin_width.count() <= 0) throw std::invalid_argument("bin width must be > 0");
  if (samples.empty()) throw EmptySamples();
  Histogram h;
  h.bin_width = bin_width;
  h.origin = origin;
  for (Duration v : samples) ++h.counts[h.bin_of(v)];
  h.total = samples.size();
  return h;
}

void write_histogram_csv(std::ostream& os, const Histogram& h) {
  os << "bin_left_ms,count,relative_frequency\n";
  char buf[96];
  for (const auto& [bin, count] : h.counts) {
    std::snprintf(buf, sizeof buf, "%.6f,%llu,%.9f\n", to_ms(h.bin_left(bin)), static_cast<unsigned long long>(count),
                  static_cast<double>(count) / static_cast<double>(h.total));
    os << buf;
  }
}

}  // namespace sdnfp
