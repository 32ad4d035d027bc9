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


#include "sdnfp/netsim/distribution.h"

#include <cmath>
#include <sstream>

namespace sdnfp {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct ParetoShape {
  double alpha;
  double xm;
};

ParetoShape pareto_shape(const ParetoDelay& p) {
  const double mean = to_ms(p.mean);
  if (p.variance_ms2 <= 0.0) return {0.0, mean};
  const double alpha = 1.0 + std::sqrt(1.0 + mean * mean / p.variance_ms2);
  return {alpha, mean * (alpha - 1.0) / alpha};
}

}  // namespace

double sample_ms(const DelayDistribution& dist, std::mt19937_64& gen) {
  return std::visit(
      overloaded{
          [](const ConstantDelay& c) { return to_ms(c.value); },
          [&](const LogNormalDelay& d) {
            if (d.sigma <= 0.0) return to_ms(d.median);
            std::lognormal_distribution<double> ln(std::log(to_ms(d.median)), d.sigma);
            return ln(gen);
          },
          [&](const NormalDelay& d) {
            if (d.sd.count() <= 0) return to_ms(d.mean);
            std::normal_distribution<double> n(to_ms(d.mean), to_ms(d.sd));
            return n(gen);
          },
          [&](const UniformDelay& d) {
            std::uniform_real_distribution<double> u(to_ms(d.lo), to_ms(d.hi));
            return u(gen);
          },
          [&](const ParetoDelay& d) {
            const ParetoShape s = pareto_shape(d);
            if (s.alpha <= 0.0) return s.xm;
            const double u = std::uniform_real_distribution<double>(0.0, 1.0)(gen);
            return s.xm * std::pow(1.0 - u, -1.0 / s.alpha);
          },
      },
      dist);
}

Duration sample(const DelayDistribution& dist, std::mt19937_64& gen) {
  return from_ms(sample_ms(dist, gen));
}

double mean_ms(const DelayDistribution& dist) {
  return std::visit(
      overloaded{
          [](const ConstantDelay& c) { return to_ms(c.value); },
          [](const LogNormalDelay& d) { return to_ms(d.median) * std::exp(d.sigma * d.sigma / 2); },
          [](const NormalDelay& d) { return to_ms(d.mean); },
          [](const UniformDelay& d) { return (to_ms(d.lo) + to_ms(d.hi)) / 2; },
          [](const ParetoDelay& d) { return to_ms(d.mean); },
      },
      dist);
}

bool is_nonnegative(const DelayDistribution& dist, bool strict) {
  auto ok = [strict](double v) { return strict ? v > 0.0 : v >= 0.0; };
  return std::visit(
      overloaded{
          [&](const ConstantDelay& c) { return ok(to_ms(c.value)); },
          [&](const LogNormalDelay& d) { return d.median.count() > 0 && d.sigma >= 0.0; },
          [&](const NormalDelay& d) { return d.sd.count() == 0 && ok(to_ms(d.mean)); },
          [&](const UniformDelay& d) { return d.lo <= d.hi && ok(to_ms(d.lo)); },
          [&](const ParetoDelay& d) { return d.mean.count() > 0 && d.variance_ms2 >= 0.0; },
      },
      dist);
}

std::string describe(const DelayDistribution& dist) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const ConstantDelay& c) { os << "constant(" << format_duration(c.value) << ")"; },
                 [&](const LogNormalDelay& d) {
                   os << "lognormal(median=" << format_duration(d.median) << ", sigma=" << d.sigma << ")";
                 },
                 [&](const NormalDelay& d) {
                   os << "normal(mean=" << format_duration(d.mean) << ", sd=" << format_duration(d.sd) << ")";
                 },
                 [&](const UniformDelay& d) {
                   os << "uniform(" << format_duration(d.lo) << ", " << format_duration(d.hi) << ")";
                 },
                 [&](const ParetoDelay& d) {
                   os << "pareto(mean=" << format_duration(d.mean) << ", variance=" << d.variance_ms2 << "ms^2)";
                 },
             },
             dist);
  return os.str();
}

}  // namespace sdnfp
