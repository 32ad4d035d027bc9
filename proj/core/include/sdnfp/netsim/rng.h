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


#ifndef SDNFP_NETSIM_RNG_H_
#define SDNFP_NETSIM_RNG_H_

#include <array>
#include <cstdint>
#include <random>

namespace sdnfp {

/// Independent random streams. A draw is identified by its stream and a
/// tuple of keys (trial, packet, link, ...) instead of by its position in a
/// shared sequence, so adding or removing an unrelated draw never shifts
/// other draws.
enum class Stream : std::uint32_t {
  kCrossTraffic = 1,
  kJitter = 2,
  kInstall = 3,
  kLookup = 4,
  kElement = 5,
  kDrift = 6,
  kLoss = 7,
  kUser = 100,
};

class KeyedRng {
 public:
  explicit KeyedRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  template <typename... Keys>
  std::mt19937_64 engine(Stream stream, Keys... keys) const {
    std::array<std::uint32_t, 3 + 2 * sizeof...(Keys)> words{};
    std::size_t i = 0;
    words[i++] = static_cast<std::uint32_t>(seed_);
    words[i++] = static_cast<std::uint32_t>(seed_ >> 32);
    words[i++] = static_cast<std::uint32_t>(stream);
    ((words[i++] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(keys)),
      words[i++] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(keys) >> 32)),
     ...);
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
  }

  /// Uniform in [0, 1).
  template <typename... Keys>
  double uniform(Stream stream, Keys... keys) const {
    auto gen = engine(stream, keys...);
    return std::uniform_real_distribution<double>(0.0, 1.0)(gen);
  }

 private:
  std::uint64_t seed_;
};

}  // namespace sdnfp

#endif  // SDNFP_NETSIM_RNG_H_
