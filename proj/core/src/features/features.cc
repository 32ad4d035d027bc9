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


#include "sdnfp/features/features.h"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace sdnfp {

std::string_view to_string(Feature f) { return f == Feature::kDispersion ? "dispersion" : "delta_rtt"; }

Feature parse_feature(std::string_view text) {
  if (text == "dispersion") return Feature::kDispersion;
  if (text == "delta_rtt") return Feature::kDeltaRtt;
  throw std::invalid_argument("unknown feature '" + std::string(text) + "'");
}

std::string format_ms(Duration d) {
  // Exact decimal rendering of integer ns as ms.
  const std::int64_t ns = d.count();
  const std::uint64_t mag = ns < 0 ? static_cast<std::uint64_t>(-(ns + 1)) + 1 : static_cast<std::uint64_t>(ns);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%llu.%06llu", ns < 0 ? "-" : "", static_cast<unsigned long long>(mag / 1'000'000),
                static_cast<unsigned long long>(mag % 1'000'000));
  return buf;
}

Duration dispersion_from_trace(const TraceRecord& first, const TraceRecord& second) {
  if (!first.client_recv || !second.client_recv) throw MissingReply();
  return *second.client_recv - *first.client_recv;
}

Duration delta_rtt_from_trace(const TraceRecord& first, const TraceRecord& second) {
  const auto a = first.rtt();
  const auto b = second.rtt();
  if (!a || !b) throw MissingReply();
  return *a - *b;
}

Label pair_label(const TraceRecord& first, const TraceRecord& second) {
  if (!first.miss || !second.miss) throw std::invalid_argument("trace has no ground-truth miss flags");
  return (*first.miss || *second.miss) ? Label::kY : Label::kN;
}

Label delta_rtt_label(const TraceRecord& first, const TraceRecord& second) {
  if (!first.miss || !second.miss) throw std::invalid_argument("trace has no ground-truth miss flags");
  if (*first.miss && *second.miss) throw AmbiguousLabel();
  return *first.miss ? Label::kY : Label::kN;
}

std::vector<Duration> FeatureSet::values(Feature f, Label l) const {
  std::vector<Duration> out;
  for (const auto& s : samples)
    if (s.feature == f && s.label == l) out.push_back(s.value);
  return out;
}

std::size_t FeatureSet::count(Feature f, Label l) const {
  std::size_t c = 0;
  for (const auto& s : samples)
    if (s.feature == f && s.label == l) ++c;
  return c;
}

namespace {

void add_delta(FeatureSet& set, const TraceRecord& a, const TraceRecord& b, const ScenarioContext& ctx) {
  FeatureSample s;
  s.feature = Feature::kDeltaRtt;
  s.context = ctx;
  try {
    s.label = delta_rtt_label(a, b);
    s.value = delta_rtt_from_trace(a, b);
  } catch (const AmbiguousLabel&) {
    ++set.ambiguous;
    return;
  } catch (const MissingReply&) {
    ++set.missing_reply;
    return;
  }
  set.samples.push_back(s);
}

}  // namespace

FeatureSet label_samples(std::span<const TraceRecord> trace, const ScenarioContext& context,
                         const FeatureOptions& options) {
  // trial -> records of that trial in trace order
  std::map<std::uint32_t, std::vector<const TraceRecord*>> trials;
  for (const auto& r : trace) trials[r.trial].push_back(&r);

  FeatureSet set;
  for (const auto& [trial, recs] : trials) {
    std::map<int, const TraceRecord*> pair_first, pair_second, singles;
    const TraceRecord* control = nullptr;
    for (const TraceRecord* r : recs) {
      switch (r->role) {
        case ProbeRole::kPairFirst: pair_first[r->group] = r; break;
        case ProbeRole::kPairSecond: pair_second[r->group] = r; break;
        case ProbeRole::kSingle: singles[r->group] = r; break;
        case ProbeRole::kControl: control = r; break;
        default: break;
      }
    }
    if (options.dispersion) {
      for (const auto& [g, a] : pair_first) {
        auto it = pair_second.find(g);
        if (it == pair_second.end()) continue;
        const TraceRecord* b = it->second;
        FeatureSample s;
        s.feature = Feature::kDispersion;
        s.context = context;
        s.label = pair_label(*a, *b);
        try {
          s.value = dispersion_from_trace(*a, *b);
        } catch (const MissingReply&) {
          ++set.missing_reply;
          continue;
        }
        if (a->server_recv && b->server_recv) s.server_value = *b->server_recv - *a->server_recv;
        set.samples.push_back(s);
      }
    }
    if (options.delta_rtt_singles) {
      const TraceRecord* s0 = singles.count(0) ? singles[0] : nullptr;
      const TraceRecord* s1 = singles.count(1) ? singles[1] : nullptr;
      if (s0 && s1) add_delta(set, *s0, *s1, context);
      if (s1 && control) add_delta(set, *s1, *control, context);
    }
    if (options.delta_rtt_pairs) {
      const TraceRecord* prev = nullptr;
      for (const auto& [g, a] : pair_first) {
        if (prev) add_delta(set, *prev, *a, context);
        prev = a;
      }
    }
  }
  return set;
}

FeatureSet passive_delta_rtt(std::span<const TraceRecord> trace, std::span<const PassivePair> pairs,
                             const ScenarioContext& context) {
  FeatureSet set;
  for (const auto& p : pairs) add_delta(set, trace[p.first], trace[p.second], context);
  return set;
}

void write_samples_csv(std::ostream& os, std::span<const FeatureSample> samples) {
  os << "feature,value_ms,label,k,kind,link_bps,span_s\n";
  for (const auto& s : samples) {
    char span[48];
    std::snprintf(span, sizeof span, "%.9g", static_cast<double>(s.context.span.count()) / 1e9);
    os << to_string(s.feature) << ',' << format_ms(s.value) << ',' << to_string(s.label) << ',' << s.context.k << ','
       << to_string(s.context.kind) << ',' << s.context.data_link.bits_per_second << ',' << span << '\n';
  }
}

std::vector<FeatureSample> read_samples_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("feature,value_ms,label,k,kind,link_bps,span_s", 0) != 0)
    throw IoError("samples: missing or unexpected header");
  std::vector<FeatureSample> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      f.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (f.size() != 7) throw IoError("samples line " + std::to_string(lineno) + ": expected 7 fields");
    try {
      FeatureSample s;
      s.feature = parse_feature(f[0]);
      s.value = from_ms(std::stod(f[1]));
      s.label = parse_label(f[2]);
      s.context.k = std::stoul(f[3]);
      s.context.kind = parse_switch_kind(f[4]);
      s.context.data_link = Bandwidth{std::stoull(f[5])};
      s.context.span = Duration{static_cast<std::int64_t>(std::llround(std::stod(f[6]) * 1e9))};
      out.push_back(s);
    } catch (const std::exception& e) {
      throw IoError("samples line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace sdnfp
