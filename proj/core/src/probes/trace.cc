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


#include "sdnfp/probes/trace.h"

#include <charconv>
#include <stdexcept>
#include <string>

#include "sdnfp/errors.h"

namespace sdnfp {
namespace {

constexpr std::string_view kHeader =
    "trial,id,kind,role,group,flow,client_send_ns,server_recv_ns,server_reply_send_ns,client_recv_ns,miss";

void put_ts(std::ostream& os, const std::optional<Timestamp>& t) {
  if (t) os << t->time_since_epoch().count();
}

template <typename T>
T parse_int(std::string_view s, std::size_t line) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw IoError("trace line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
  return v;
}

std::optional<Timestamp> parse_ts(std::string_view s, std::size_t line) {
  if (s.empty()) return std::nullopt;
  return Timestamp{Duration{parse_int<std::int64_t>(s, line)}};
}

}  // namespace

std::string_view to_string(ProbeRole role) {
  switch (role) {
    case ProbeRole::kClear: return "clear";
    case ProbeRole::kPairFirst: return "pair_first";
    case ProbeRole::kPairSecond: return "pair_second";
    case ProbeRole::kSingle: return "single";
    case ProbeRole::kControl: return "control";
    case ProbeRole::kOther: return "other";
  }
  return "other";
}

ProbeRole parse_probe_role(std::string_view text) {
  if (text == "clear") return ProbeRole::kClear;
  if (text == "pair_first") return ProbeRole::kPairFirst;
  if (text == "pair_second") return ProbeRole::kPairSecond;
  if (text == "single") return ProbeRole::kSingle;
  if (text == "control") return ProbeRole::kControl;
  if (text == "other" || text.empty()) return ProbeRole::kOther;
  throw std::invalid_argument("unknown probe role '" + std::string(text) + "'");
}

void write_trace_csv(std::ostream& os, const Trace& trace) {
  os << kHeader << '\n';
  for (const auto& r : trace) {
    os << r.trial << ',' << r.id << ',' << to_string(r.kind) << ',' << to_string(r.role) << ',' << r.group << ','
       << r.flow.to_string() << ',' << r.client_send.time_since_epoch().count() << ',';
    put_ts(os, r.server_recv);
    os << ',';
    put_ts(os, r.server_reply_send);
    os << ',';
    put_ts(os, r.client_recv);
    os << ',';
    if (r.miss) os << (*r.miss ? 1 : 0);
    os << '\n';
  }
}

Trace read_trace_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("trace: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) throw IoError("trace: unexpected header '" + line + "'");
  Trace out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 11) throw IoError("trace line " + std::to_string(lineno) + ": expected 11 fields");
    TraceRecord r;
    try {
      r.trial = parse_int<std::uint32_t>(f[0], lineno);
      r.id = parse_int<std::uint64_t>(f[1], lineno);
      r.kind = parse_packet_kind(f[2]);
      r.role = parse_probe_role(f[3]);
      r.group = parse_int<int>(f[4], lineno);
      r.flow = FlowKey::parse(f[5]);
      r.client_send = Timestamp{Duration{parse_int<std::int64_t>(f[6], lineno)}};
      r.server_recv = parse_ts(f[7], lineno);
      r.server_reply_send = parse_ts(f[8], lineno);
      r.client_recv = parse_ts(f[9], lineno);
      if (f[10] == "1") r.miss = true;
      else if (f[10] == "0") r.miss = false;
      else if (!f[10].empty()) throw IoError("bad miss flag");
    } catch (const IoError&) {
      throw;
    } catch (const std::exception& e) {
      throw IoError("trace line " + std::to_string(lineno) + ": " + e.what());
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace sdnfp
