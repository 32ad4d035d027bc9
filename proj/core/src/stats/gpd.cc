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


#include "sdnfp/stats/gpd.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sdnfp/errors.h"

namespace sdnfp {
namespace {

constexpr double kExpShape = 1e-9;

double profile_xi(const std::vector<double>& y, double theta) {
  double s = 0.0;
  for (double v : y) s += std::log1p(theta * v);
  return s / static_cast<double>(y.size());
}

// Profile log-likelihood per sample at theta = xi/sigma; -inf outside the
// admissible region (xi <= -1 or 1 + theta*y <= 0).
double profile_ll(const std::vector<double>& y, double ymax, double mean, double theta) {
  if (theta * ymax <= -1.0) return -std::numeric_limits<double>::infinity();
  if (std::abs(theta * ymax) < 1e-10) return -(std::log(mean) + 1.0);
  const double xi = profile_xi(y, theta);
  if (!(xi > -1.0) || xi / theta <= 0.0) return -std::numeric_limits<double>::infinity();
  return -(std::log(xi / theta) + xi + 1.0);
}

}  // namespace

void validate(const GPDParams& p) {
  if (!std::isfinite(p.shape) || !std::isfinite(p.scale) || !std::isfinite(p.location))
    throw std::invalid_argument("GPD parameters must be finite");
  if (!(p.scale > 0.0)) throw std::invalid_argument("GPD scale must be > 0");
}

double gpd_pdf(double x, const GPDParams& p) {
  const double z = (x - p.location) / p.scale;
  if (z < 0.0) return 0.0;
  if (std::abs(p.shape) < kExpShape) return std::exp(-z) / p.scale;
  const double base = 1.0 + p.shape * z;
  if (base <= 0.0) return 0.0;
  return std::pow(base, -1.0 / p.shape - 1.0) / p.scale;
}

double gpd_cdf(double x, const GPDParams& p) {
  const double z = (x - p.location) / p.scale;
  if (z <= 0.0) return 0.0;
  if (std::abs(p.shape) < kExpShape) return -std::expm1(-z);
  const double base = 1.0 + p.shape * z;
  if (base <= 0.0) return 1.0;
  return -std::expm1(-std::log(base) / p.shape);
}

double gpd_quantile(double u, const GPDParams& p) {
  if (std::abs(p.shape) < kExpShape) return p.location - p.scale * std::log1p(-u);
  return p.location + p.scale * std::expm1(-p.shape * std::log1p(-u)) / p.shape;
}

double gpd_sample(const GPDParams& p, std::mt19937_64& gen) {
  return gpd_quantile(std::uniform_real_distribution<double>(0.0, 1.0)(gen), p);
}

double gpd_mean(const GPDParams& p) {
  if (p.shape >= 1.0) return std::numeric_limits<double>::infinity();
  return p.location + p.scale / (1.0 - p.shape);
}

double gpd_upper_bound(const GPDParams& p) {
  if (p.shape >= 0.0) return std::numeric_limits<double>::infinity();
  return p.location - p.scale / p.shape;
}

double ks_statistic(std::span<const double> samples_ms, const GPDParams& p) {
  if (samples_ms.empty()) throw EmptySamples();
  std::vector<double> x(samples_ms.begin(), samples_ms.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = gpd_cdf(x[i], p);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

GPDFit fit_gpd(std::span<const double> samples_ms) {
  if (samples_ms.size() < kMinFitSamples)
    throw FitFailed("need at least " + std::to_string(kMinFitSamples) + " samples");
  for (double v : samples_ms)
    if (!std::isfinite(v)) throw FitFailed("non-finite sample");
  const auto [lo_it, hi_it] = std::minmax_element(samples_ms.begin(), samples_ms.end());
  if (*hi_it - *lo_it <= 0.0) throw FitFailed("samples are constant");

  const double mu = *lo_it - kTimeQuantumMs;
  std::vector<double> y;
  y.reserve(samples_ms.size());
  for (double v : samples_ms) y.push_back(v - mu);
  const double ymax = *std::max_element(y.begin(), y.end());
  const double mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());

  // Coarse grid over z = theta * ymax in (-1, 1e6].
  std::vector<double> grid;
  for (int i = 0; i < 160; ++i) grid.push_back(-1.0 + std::pow(10.0, -8.0 + 8.0 * i / 160.0));
  grid.push_back(0.0);
  for (int i = 0; i <= 160; ++i) grid.push_back(std::pow(10.0, -6.0 + 12.0 * i / 160.0));

  auto ll_z = [&](double z) { return profile_ll(y, ymax, mean, z / ymax); };
  std::size_t best = 0;
  double best_ll = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double l = ll_z(grid[i]);
    if (l > best_ll) {
      best_ll = l;
      best = i;
    }
  }
  if (!std::isfinite(best_ll)) throw FitFailed("likelihood is degenerate");

  // Golden-section refinement between the neighbours of the grid maximum.
  double a = best > 0 ? grid[best - 1] : grid[0];
  double b = best + 1 < grid.size() ? grid[best + 1] : grid[best];
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = ll_z(c);
  double fd = ll_z(d);
  for (int it = 0; it < 200 && (b - a) > 1e-12 * (1.0 + std::abs(a)); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = ll_z(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = ll_z(d);
    }
  }
  double z = (a + b) / 2.0;
  double l = ll_z(z);
  if (l < best_ll) {
    z = grid[best];
    l = best_ll;
  }

  GPDFit fit;
  fit.n = samples_ms.size();
  fit.params.location = mu;
  const double theta = z / ymax;
  if (std::abs(z) < 1e-10) {
    fit.params.shape = 0.0;
    fit.params.scale = mean;
  } else {
    fit.params.shape = profile_xi(y, theta);
    fit.params.scale = fit.params.shape / theta;
  }
  if (!(fit.params.scale > 0.0) || !std::isfinite(fit.params.scale)) throw FitFailed("likelihood is degenerate");
  fit.log_likelihood = l * static_cast<double>(y.size());
  fit.ks = ks_statistic(samples_ms, fit.params);
  return fit;
}

}  // namespace sdnfp
