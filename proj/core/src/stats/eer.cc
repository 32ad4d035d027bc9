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


#include "sdnfp/stats/eer.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "sdnfp/errors.h"

namespace sdnfp {

std::string_view to_string(Label l) { return l == Label::kY ? "Y" : "N"; }

Label parse_label(std::string_view text) {
  if (text == "Y") return Label::kY;
  if (text == "N") return Label::kN;
  throw std::invalid_argument("unknown label '" + std::string(text) + "'");
}

EERResult compute_eer(std::span<const double> samples_n, std::span<const double> samples_y, bool keep_curve) {
  if (samples_n.empty() || samples_y.empty()) throw EmptySamples();
  std::vector<double> n(samples_n.begin(), samples_n.end());
  std::vector<double> y(samples_y.begin(), samples_y.end());
  std::sort(n.begin(), n.end());
  std::sort(y.begin(), y.end());
  for (double v : n)
    if (std::isnan(v)) throw std::invalid_argument("NaN sample");
  for (double v : y)
    if (std::isnan(v)) throw std::invalid_argument("NaN sample");

  std::vector<double> thresholds;
  thresholds.reserve(n.size() + y.size() + 1);
  std::merge(n.begin(), n.end(), y.begin(), y.end(), std::back_inserter(thresholds));
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  const double lo = thresholds.front();
  const double hi = thresholds.back();
  thresholds.push_back(hi + (hi > lo ? (hi - lo) : 1.0));

  const auto nn = static_cast<std::int64_t>(n.size());
  const auto ny = static_cast<std::int64_t>(y.size());
  EERResult r;
  if (keep_curve) r.curve.reserve(thresholds.size());

  // Counts at a threshold: c_n = |N >= t|, c_y = |Y < t|. The sign of
  // FMR - FNR is that of c_y*|N| - c_n*|Y|, which is exact in integers.
  std::int64_t prev_cn = 0, prev_cy = 0, prev_d = 0;
  double prev_t = 0.0;
  bool found = false;
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    const double t = thresholds[i];
    const auto cn = static_cast<std::int64_t>(n.end() - std::lower_bound(n.begin(), n.end(), t));
    const auto cy = static_cast<std::int64_t>(std::lower_bound(y.begin(), y.end(), t) - y.begin());
    const std::int64_t d = cy * nn - cn * ny;
    if (keep_curve)
      r.curve.push_back({t, static_cast<double>(cy) / static_cast<double>(ny),
                         static_cast<double>(cn) / static_cast<double>(nn)});
    if (!found && d >= 0) {
      found = true;
      if (d == 0 || i == 0) {
        r.eer = static_cast<double>(cy) / static_cast<double>(ny);
        r.threshold = t;
      } else {
        // Crossing of the two piecewise-linear rates between prev and t.
        const std::int64_t span = d - prev_d;  // > 0
        const double lambda = static_cast<double>(-prev_d) / static_cast<double>(span);
        const long double fmr_num = static_cast<long double>(prev_cy) * span +
                                    static_cast<long double>(-prev_d) * (cy - prev_cy);
        const long double fnr_num = static_cast<long double>(prev_cn) * span +
                                    static_cast<long double>(-prev_d) * (cn - prev_cn);
        const long double fmr = fmr_num / (static_cast<long double>(span) * ny);
        const long double fnr = fnr_num / (static_cast<long double>(span) * nn);
        r.eer = static_cast<double>((fmr + fnr) / 2);
        r.threshold = prev_t + lambda * (t - prev_t);
      }
      if (!keep_curve) break;
    }
    prev_cn = cn;
    prev_cy = cy;
    prev_d = d;
    prev_t = t;
  }
  return r;
}

EERResult compute_eer(std::span<const Duration> samples_n, std::span<const Duration> samples_y, bool keep_curve) {
  std::vector<double> n, y;
  n.reserve(samples_n.size());
  y.reserve(samples_y.size());
  for (Duration d : samples_n) n.push_back(to_ms(d));
  for (Duration d : samples_y) y.push_back(to_ms(d));
  return compute_eer(std::span<const double>(n), std::span<const double>(y), keep_curve);
}

}  // namespace sdnfp
