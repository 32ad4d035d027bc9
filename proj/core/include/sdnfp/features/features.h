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


#ifndef SDNFP_FEATURES_FEATURES_H_
#define SDNFP_FEATURES_FEATURES_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "sdnfp/errors.h"
#include "sdnfp/netsim/path.h"
#include "sdnfp/probes/passive.h"
#include "sdnfp/probes/trace.h"
#include "sdnfp/stats/eer.h"
#include "sdnfp/units.h"

namespace sdnfp {

enum class Feature { kDispersion, kDeltaRtt };

std::string_view to_string(Feature f);
Feature parse_feature(std::string_view text);

class MissingReply : public Error {
 public:
  MissingReply() : Error("reply missing") {}
};

class AmbiguousLabel : public Error {
 public:
  AmbiguousLabel() : Error("both members triggered installation") {}
};

struct ScenarioContext {
  std::size_t k = 0;
  SwitchKind kind = SwitchKind::kHardware;
  Bandwidth data_link;
  Duration span{std::chrono::seconds(1)};
};

struct FeatureSample {
  Feature feature = Feature::kDispersion;
  Duration value{0};  // signed
  Label label = Label::kN;
  ScenarioContext context;
  /// Server-side counterpart (dispersion only), for diagnostics.
  std::optional<Duration> server_value;
};

/// client_recv(second) - client_recv(first). Throws MissingReply.
Duration dispersion_from_trace(const TraceRecord& first, const TraceRecord& second);
/// RTT(first) - RTT(second). Throws MissingReply.
Duration delta_rtt_from_trace(const TraceRecord& first, const TraceRecord& second);

/// Y iff either member triggered installation. Throws std::invalid_argument
/// without ground truth.
Label pair_label(const TraceRecord& first, const TraceRecord& second);
/// Y iff exactly the first member triggered installation. Throws
/// AmbiguousLabel if both did.
Label delta_rtt_label(const TraceRecord& first, const TraceRecord& second);

struct FeatureOptions {
  bool dispersion = true;
  /// (single 1, single 2) and (single 2, control) couples.
  bool delta_rtt_singles = true;
  /// Consecutive pair heads as extra couples.
  bool delta_rtt_pairs = false;
};

struct FeatureSet {
  std::vector<FeatureSample> samples;
  std::size_t missing_reply = 0;
  std::size_t ambiguous = 0;

  std::vector<Duration> values(Feature f, Label l) const;
  std::size_t count(Feature f, Label l) const;
};

/// Labeled samples of a probe-train trace, grouped by trial.
FeatureSet label_samples(std::span<const TraceRecord> trace, const ScenarioContext& context,
                         const FeatureOptions& options = {});

/// Labeled delta-RTT samples over passively extracted pairs.
FeatureSet passive_delta_rtt(std::span<const TraceRecord> trace, std::span<const PassivePair> pairs,
                             const ScenarioContext& context);

/// "feature,value_ms,label,k,kind,link_bps,span_s"
void write_samples_csv(std::ostream& os, std::span<const FeatureSample> samples);
/// Throws IoError on malformed input.
std::vector<FeatureSample> read_samples_csv(std::istream& is);

std::string format_ms(Duration d);

}  // namespace sdnfp

#endif  // SDNFP_FEATURES_FEATURES_H_
