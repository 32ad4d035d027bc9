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


#include "sdnfp/stats/ttest.h"

#include <cmath>

#include <boost/math/distributions/students_t.hpp>

#include "sdnfp/errors.h"

namespace sdnfp {
namespace {

struct Moments {
  double n, mean, var;
};

Moments moments(std::span<const double> x) {
  if (x.size() < 2) throw DegenerateVariance();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double var = ss / static_cast<double>(x.size() - 1);
  if (!(var > 0.0)) throw DegenerateVariance();
  return {static_cast<double>(x.size()), mean, var};
}

}  // namespace

TTestResult welch_t_test(std::span<const double> samples_n, std::span<const double> samples_y) {
  const Moments a = moments(samples_n);
  const Moments b = moments(samples_y);
  const double sa = a.var / a.n;
  const double sb = b.var / b.n;
  TTestResult r;
  r.t = (b.mean - a.mean) / std::sqrt(sa + sb);
  r.df = (sa + sb) * (sa + sb) / (sa * sa / (a.n - 1) + sb * sb / (b.n - 1));
  const boost::math::students_t dist(r.df);
  r.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(r.t)));
  const double crit = boost::math::quantile(boost::math::complement(dist, 0.005));
  r.significant_at_1pct = std::abs(r.t) > crit;
  return r;
}

}  // namespace sdnfp
