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


#include "sdnfp/netsim/flow.h"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace sdnfp {
namespace {

std::string ip_string(std::uint32_t ip) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%u.%u.%u.%u", ip >> 24, (ip >> 16) & 0xff, (ip >> 8) & 0xff, ip & 0xff);
  return buf;
}

// Reads an unsigned integer up to `max` and advances `s` past it.
std::uint32_t take_uint(std::string_view& s, std::uint32_t max) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || v > max) throw std::invalid_argument("bad flow key field");
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return v;
}

void expect(std::string_view& s, char c) {
  if (s.empty() || s.front() != c) throw std::invalid_argument(std::string("flow key: expected '") + c + "'");
  s.remove_prefix(1);
}

std::uint32_t take_ip(std::string_view& s) {
  std::uint32_t ip = 0;
  for (int i = 0; i < 4; ++i) {
    if (i) expect(s, '.');
    ip = (ip << 8) | take_uint(s, 255);
  }
  return ip;
}

}  // namespace

std::string FlowKey::to_string() const {
  return ip_string(src_ip) + ":" + std::to_string(src_port) + ">" + ip_string(dst_ip) + ":" +
         std::to_string(dst_port) + "/" + std::to_string(protocol);
}

FlowKey FlowKey::parse(std::string_view text) {
  std::string_view s = text;
  FlowKey k;
  try {
    k.src_ip = take_ip(s);
    expect(s, ':');
    k.src_port = static_cast<std::uint16_t>(take_uint(s, 65535));
    expect(s, '>');
    k.dst_ip = take_ip(s);
    expect(s, ':');
    k.dst_port = static_cast<std::uint16_t>(take_uint(s, 65535));
    expect(s, '/');
    k.protocol = static_cast<std::uint8_t>(take_uint(s, 255));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
  if (!s.empty()) throw std::invalid_argument("trailing characters in flow key '" + std::string(text) + "'");
  return k;
}

std::size_t FlowKeyHash::operator()(const FlowKey& k) const noexcept {
  std::uint64_t h = (std::uint64_t{k.src_ip} << 32) | k.dst_ip;
  h ^= (std::uint64_t{k.src_port} << 24 | std::uint64_t{k.dst_port} << 8 | k.protocol) * 0x9e3779b97f4a7c15ULL;
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 29;
  return static_cast<std::size_t>(h);
}

FlowTable::InsertResult FlowTable::insert(const FlowKey& key) {
  if (contains(key)) return InsertResult::kPresent;
  if (entries_.size() >= capacity_) return InsertResult::kFull;
  entries_.insert(key);
  return InsertResult::kInserted;
}

}  // namespace sdnfp
