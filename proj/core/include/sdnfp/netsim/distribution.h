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


#ifndef SDNFP_NETSIM_DISTRIBUTION_H_
#define SDNFP_NETSIM_DISTRIBUTION_H_

#include <random>
#include <string>
#include <variant>

#include "sdnfp/units.h"

namespace sdnfp {

struct ConstantDelay {
  Duration value{0};
};

/// exp(N(ln median, sigma^2)).
struct LogNormalDelay {
  Duration median{0};
  double sigma = 0.0;
};

struct NormalDelay {
  Duration mean{0};
  Duration sd{0};
};

struct UniformDelay {
  Duration lo{0};
  Duration hi{0};
};

/// Pareto (type I) parameterized by its first two moments.
/// alpha = 1 + sqrt(1 + mean^2/var), x_m = mean (alpha - 1) / alpha.
struct ParetoDelay {
  Duration mean{0};
  double variance_ms2 = 0.0;
};

using DelayDistribution =
    std::variant<ConstantDelay, LogNormalDelay, NormalDelay, UniformDelay, ParetoDelay>;

/// Draws one value in ms (unrounded).
double sample_ms(const DelayDistribution& dist, std::mt19937_64& gen);

/// Draws one value rounded half-up to the ns.
Duration sample(const DelayDistribution& dist, std::mt19937_64& gen);

double mean_ms(const DelayDistribution& dist);

/// True iff every sample is >= 0 (strictly > 0 with `strict`).
bool is_nonnegative(const DelayDistribution& dist, bool strict = false);

std::string describe(const DelayDistribution& dist);

}  // namespace sdnfp

#endif  // SDNFP_NETSIM_DISTRIBUTION_H_
