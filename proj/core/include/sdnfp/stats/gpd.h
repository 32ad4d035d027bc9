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


#ifndef SDNFP_STATS_GPD_H_
#define SDNFP_STATS_GPD_H_

#include <cstddef>
#include <random>
#include <span>

namespace sdnfp {

/// Generalized Pareto distribution. Values are in ms.
struct GPDParams {
  double shape = 0.0;     // xi
  double scale = 1.0;     // sigma > 0
  double location = 0.0;  // mu

  friend bool operator==(const GPDParams&, const GPDParams&) = default;
};

/// Throws std::invalid_argument unless scale > 0 and all fields are finite.
void validate(const GPDParams& p);

double gpd_pdf(double x, const GPDParams& p);
double gpd_cdf(double x, const GPDParams& p);
/// Inverse CDF for u in [0, 1).
double gpd_quantile(double u, const GPDParams& p);
double gpd_sample(const GPDParams& p, std::mt19937_64& gen);
/// Finite only for shape < 1.
double gpd_mean(const GPDParams& p);
/// mu - sigma/xi for shape < 0, +inf otherwise.
double gpd_upper_bound(const GPDParams& p);

struct GPDFit {
  GPDParams params;
  double ks = 0.0;  // Kolmogorov-Smirnov D, lower is better
  double log_likelihood = 0.0;
  std::size_t n = 0;
};

inline constexpr std::size_t kMinFitSamples = 50;
/// One ns, expressed in ms.
inline constexpr double kTimeQuantumMs = 1e-6;

/// Maximum-likelihood fit. Location is pinned at min(samples) - one time
/// quantum; shape and scale maximize the profile likelihood of the
/// exceedances. Throws FitFailed on fewer than 50 samples or a degenerate
/// likelihood (e.g. constant data).
GPDFit fit_gpd(std::span<const double> samples_ms);

/// sup |F_n(x) - F(x)| of the empirical CDF against the GPD CDF.
double ks_statistic(std::span<const double> samples_ms, const GPDParams& p);

}  // namespace sdnfp

#endif  // SDNFP_STATS_GPD_H_
