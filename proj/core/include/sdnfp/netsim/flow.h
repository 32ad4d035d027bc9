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


#ifndef SDNFP_NETSIM_FLOW_H_
#define SDNFP_NETSIM_FLOW_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>

namespace sdnfp {

/// Header 5-tuple. Two packets belong to the same flow iff keys compare equal.
struct FlowKey {
  std::uint32_t src_ip = 0;
  std::uint32_t dst_ip = 0;
  std::uint16_t src_port = 0;
  std::uint16_t dst_port = 0;
  std::uint8_t protocol = 17;

  friend bool operator==(const FlowKey&, const FlowKey&) = default;

  /// The key of the opposite direction.
  FlowKey reversed() const { return {dst_ip, src_ip, dst_port, src_port, protocol}; }

  /// "10.0.0.1:40000>10.0.1.1:7/17"
  std::string to_string() const;
  static FlowKey parse(std::string_view text);
};

struct FlowKeyHash {
  std::size_t operator()(const FlowKey& k) const noexcept;
};

class FlowTable {
 public:
  enum class InsertResult { kInserted, kPresent, kFull };

  explicit FlowTable(std::size_t capacity) : capacity_(capacity) {}

  bool contains(const FlowKey& key) const { return entries_.count(key) != 0; }
  InsertResult insert(const FlowKey& key);
  /// Room for `n` more entries.
  bool has_room(std::size_t n) const { return entries_.size() + n <= capacity_; }
  void clear() { entries_.clear(); }
  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }

 private:
  std::size_t capacity_;
  std::unordered_set<FlowKey, FlowKeyHash> entries_;
};

}  // namespace sdnfp

#endif  // SDNFP_NETSIM_FLOW_H_
