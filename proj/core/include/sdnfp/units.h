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

#ifndef SDNFP_UNITS_H_
#define SDNFP_UNITS_H_

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sdnfp {

// Simulated time is integer nanoseconds everywhere.
using Duration = std::chrono::nanoseconds;

struct SimClock {
  using rep = Duration::rep;
  using period = Duration::period;
  using duration = Duration;
  using time_point = std::chrono::time_point<SimClock, Duration>;
  static constexpr bool is_steady = true;
};

using Timestamp = SimClock::time_point;

/// Packet and frame sizes in bytes.
using Bytes = std::uint32_t;

struct Bandwidth {
  std::uint64_t bits_per_second = 0;

  friend constexpr auto operator<=>(const Bandwidth&, const Bandwidth&) = default;
};

constexpr Bandwidth megabits_per_second(std::uint64_t mbps) {
  return Bandwidth{mbps * 1'000'000ULL};
}
constexpr Bandwidth gigabits_per_second(std::uint64_t gbps) {
  return Bandwidth{gbps * 1'000'000'000ULL};
}

constexpr double to_ms(Duration d) { return static_cast<double>(d.count()) / 1e6; }
constexpr double to_ms(Timestamp t) { return to_ms(t.time_since_epoch()); }

/// Milliseconds to nanoseconds, rounding half-up.
Duration from_ms(double ms);

/// Integer division rounding half-up; denominator must be positive.
constexpr std::int64_t div_round_half_up(std::int64_t num, std::int64_t den) {
  // floor((num + den/2) / den) for both signs of num
  const std::int64_t shifted = num * 2 + den;
  const std::int64_t twice = den * 2;
  std::int64_t q = shifted / twice;
  if ((shifted % twice != 0) && ((shifted < 0) != (twice < 0))) --q;
  return q;
}

constexpr Timestamp at(Duration since_origin) { return Timestamp{since_origin}; }

class UnitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parsers for the unit-suffixed values used in scenario files. Every value
// must carry an explicit unit; a bare number is rejected.
Duration parse_duration(std::string_view text);       // ns, us, ms, s, min, h
Bandwidth parse_bandwidth(std::string_view text);     // bps, Kbps, Mbps, Gbps
Bytes parse_bytes(std::string_view text);             // B, KB
double parse_variance_ms2(std::string_view text);     // ms^2, us^2, s^2

std::string format_duration(Duration d);
std::string format_bandwidth(Bandwidth b);

}  // namespace sdnfp

#endif  // SDNFP_UNITS_H_
