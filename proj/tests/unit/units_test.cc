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

#include <gtest/gtest.h>

namespace sdnfp {
namespace {

using std::chrono::milliseconds;

TEST(Units, ParsesDurations) {
  EXPECT_EQ(parse_duration("20ms"), milliseconds(20));
  EXPECT_EQ(parse_duration("5min"), std::chrono::minutes(5));
  EXPECT_EQ(parse_duration("1s"), std::chrono::seconds(1));
  EXPECT_EQ(parse_duration("0.1ms"), Duration{100'000});
  EXPECT_EQ(parse_duration("500us"), Duration{500'000});
  EXPECT_EQ(parse_duration("7ns"), Duration{7});
  EXPECT_EQ(parse_duration(" 2 s "), std::chrono::seconds(2));
  EXPECT_EQ(parse_duration("-0.5ms"), Duration{-500'000});
}

TEST(Units, RejectsBareNumbersAndUnknownUnits) {
  EXPECT_THROW(parse_duration("20"), UnitError);
  EXPECT_THROW(parse_duration("20 parsecs"), UnitError);
  EXPECT_THROW(parse_duration("ms"), UnitError);
  EXPECT_THROW(parse_bandwidth("100"), UnitError);
  EXPECT_THROW(parse_bandwidth("0Mbps"), UnitError);
  EXPECT_THROW(parse_bytes("12"), UnitError);
}

TEST(Units, ParsesBandwidthBytesVariance) {
  EXPECT_EQ(parse_bandwidth("100Mbps").bits_per_second, 100'000'000u);
  EXPECT_EQ(parse_bandwidth("1Gbps").bits_per_second, 1'000'000'000u);
  EXPECT_EQ(parse_bandwidth("2.5Gbps").bits_per_second, 2'500'000'000u);
  EXPECT_EQ(parse_bytes("1500B"), 1500u);
  EXPECT_EQ(parse_bytes("1.5KB"), 1500u);
  EXPECT_DOUBLE_EQ(parse_variance_ms2("4ms^2"), 4.0);
  EXPECT_DOUBLE_EQ(parse_variance_ms2("2500us^2"), 0.0025);
}

TEST(Units, RoundsHalfUp) {
  EXPECT_EQ(div_round_half_up(5, 2), 3);
  EXPECT_EQ(div_round_half_up(4, 2), 2);
  EXPECT_EQ(div_round_half_up(-5, 2), -2);
  EXPECT_EQ(div_round_half_up(-6, 4), -1);
  EXPECT_EQ(from_ms(0.0000005), Duration{1});
  EXPECT_EQ(from_ms(0.12), Duration{120'000});
  EXPECT_EQ(from_ms(-0.8), Duration{-800'000});
}

TEST(Units, FormatsRoundTrip) {
  for (const char* s : {"20ms", "5s", "500us", "7ns"}) EXPECT_EQ(format_duration(parse_duration(s)), s);
  EXPECT_EQ(format_bandwidth(megabits_per_second(100)), "100Mbps");
  EXPECT_EQ(format_bandwidth(gigabits_per_second(1)), "1Gbps");
}

}  // namespace
}  // namespace sdnfp
