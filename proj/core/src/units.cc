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


#include "sdnfp/units.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace sdnfp {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Splits "12.5ms" into (12.5, "ms"). Throws on a missing number or unit.
std::pair<double, std::string_view> split(std::string_view text) {
  const std::string_view s = trim(text);
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first) {
    throw UnitError("not a number with unit: '" + std::string(text) + "'");
  }
  std::string_view unit = trim(std::string_view(ptr, static_cast<size_t>(last - ptr)));
  if (unit.empty()) {
    throw UnitError("missing unit in '" + std::string(text) + "'");
  }
  if (!std::isfinite(value)) throw UnitError("non-finite value '" + std::string(text) + "'");
  return {value, unit};
}

}  // namespace

Duration from_ms(double ms) {
  return Duration{static_cast<std::int64_t>(std::floor(ms * 1e6 + 0.5))};
}

Duration parse_duration(std::string_view text) {
  auto [v, unit] = split(text);
  double ns_per = 0.0;
  if (unit == "ns") ns_per = 1.0;
  else if (unit == "us") ns_per = 1e3;
  else if (unit == "ms") ns_per = 1e6;
  else if (unit == "s") ns_per = 1e9;
  else if (unit == "min") ns_per = 60e9;
  else if (unit == "h") ns_per = 3600e9;
  else if (unit == "d") ns_per = 86400e9;
  else throw UnitError("unknown duration unit '" + std::string(unit) + "'");
  return Duration{static_cast<std::int64_t>(std::floor(v * ns_per + 0.5))};
}

Bandwidth parse_bandwidth(std::string_view text) {
  auto [v, unit] = split(text);
  double per = 0.0;
  if (unit == "bps") per = 1.0;
  else if (unit == "Kbps" || unit == "kbps") per = 1e3;
  else if (unit == "Mbps") per = 1e6;
  else if (unit == "Gbps") per = 1e9;
  else throw UnitError("unknown bandwidth unit '" + std::string(unit) + "'");
  const double bps = std::floor(v * per + 0.5);
  if (bps <= 0) throw UnitError("bandwidth must be positive: '" + std::string(text) + "'");
  return Bandwidth{static_cast<std::uint64_t>(bps)};
}

Bytes parse_bytes(std::string_view text) {
  auto [v, unit] = split(text);
  double per = 0.0;
  if (unit == "B") per = 1.0;
  else if (unit == "KB") per = 1000.0;
  else throw UnitError("unknown size unit '" + std::string(unit) + "'");
  const double b = std::floor(v * per + 0.5);
  if (b <= 0 || b > 4e9) throw UnitError("size out of range: '" + std::string(text) + "'");
  return static_cast<Bytes>(b);
}

double parse_variance_ms2(std::string_view text) {
  auto [v, unit] = split(text);
  if (v < 0) throw UnitError("variance must be >= 0: '" + std::string(text) + "'");
  if (unit == "ms^2" || unit == "ms2") return v;
  if (unit == "us^2" || unit == "us2") return v * 1e-6;
  if (unit == "s^2" || unit == "s2") return v * 1e6;
  throw UnitError("unknown variance unit '" + std::string(unit) + "'");
}

std::string format_duration(Duration d) {
  const auto ns = d.count();
  char buf[64];
  if (ns % 1'000'000'000 == 0) std::snprintf(buf, sizeof buf, "%llds", static_cast<long long>(ns / 1'000'000'000));
  else if (ns % 1'000'000 == 0) std::snprintf(buf, sizeof buf, "%lldms", static_cast<long long>(ns / 1'000'000));
  else if (ns % 1'000 == 0) std::snprintf(buf, sizeof buf, "%lldus", static_cast<long long>(ns / 1'000));
  else std::snprintf(buf, sizeof buf, "%lldns", static_cast<long long>(ns));
  return buf;
}

std::string format_bandwidth(Bandwidth b) {
  const auto bps = b.bits_per_second;
  char buf[64];
  if (bps % 1'000'000'000 == 0) std::snprintf(buf, sizeof buf, "%lluGbps", static_cast<unsigned long long>(bps / 1'000'000'000));
  else if (bps % 1'000'000 == 0) std::snprintf(buf, sizeof buf, "%lluMbps", static_cast<unsigned long long>(bps / 1'000'000));
  else std::snprintf(buf, sizeof buf, "%llubps", static_cast<unsigned long long>(bps));
  return buf;
}

}  // namespace sdnfp
