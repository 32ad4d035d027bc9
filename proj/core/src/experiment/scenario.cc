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


#include "sdnfp/experiment/scenario.h"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include "sdnfp/errors.h"

namespace sdnfp {
namespace {

using Json = nlohmann::json;

// Recursive map merge; `over` wins, sequences and scalars are replaced.
YAML::Node merge(const YAML::Node& base, const YAML::Node& over) {
  if (!base || base.IsNull()) return YAML::Clone(over);
  if (!over || over.IsNull()) return YAML::Clone(base);
  if (!base.IsMap() || !over.IsMap()) return YAML::Clone(over);
  YAML::Node out = YAML::Clone(base);
  for (const auto& kv : over) {
    const std::string key = kv.first.as<std::string>();
    out[key] = merge(base[key], kv.second);
  }
  return out;
}

class Reader {
 public:
  Reader(YAML::Node node, std::string where) : node_(std::move(node)), where_(std::move(where)) {}

  bool has(const std::string& key) const { return node_.IsMap() && node_[key] && !node_[key].IsNull(); }
  std::string field(const std::string& key) const { return where_.empty() ? key : where_ + "." + key; }
  Reader child(const std::string& key) const {
    if (!has(key)) throw ConfigError(field(key), "missing");
    return Reader(node_[key], field(key));
  }
  YAML::Node raw(const std::string& key) const { return node_[key]; }
  const YAML::Node& node() const { return node_; }
  const std::string& where() const { return where_; }

  std::string str(const std::string& key) const {
    if (!has(key)) throw ConfigError(field(key), "missing");
    try {
      return node_[key].as<std::string>();
    } catch (const YAML::Exception&) {
      throw ConfigError(field(key), "expected a scalar");
    }
  }
  std::string str(const std::string& key, const std::string& dflt) const { return has(key) ? str(key) : dflt; }

  template <typename T>
  T num(const std::string& key) const {
    if (!has(key)) throw ConfigError(field(key), "missing");
    try {
      return node_[key].as<T>();
    } catch (const YAML::Exception&) {
      throw ConfigError(field(key), "expected a number");
    }
  }
  template <typename T>
  T num(const std::string& key, T dflt) const {
    return has(key) ? num<T>(key) : dflt;
  }

  template <typename F>
  auto unit(const std::string& key, F parse) const {
    const std::string s = str(key);
    try {
      return parse(s);
    } catch (const UnitError& e) {
      throw ConfigError(field(key), e.what());
    }
  }
  Duration duration(const std::string& key) const { return unit(key, [](const std::string& s) { return parse_duration(s); }); }
  Duration duration(const std::string& key, Duration dflt) const { return has(key) ? duration(key) : dflt; }
  Bytes bytes(const std::string& key, Bytes dflt) const {
    return has(key) ? unit(key, [](const std::string& s) { return parse_bytes(s); }) : dflt;
  }

 private:
  YAML::Node node_;
  std::string where_;
};

DelayDistribution parse_distribution(const Reader& r) {
  const std::string dist = r.str("dist");
  if (dist == "constant") return ConstantDelay{r.duration("value")};
  if (dist == "lognormal") {
    LogNormalDelay d{r.duration("median"), r.num<double>("sigma")};
    if (d.median.count() <= 0 || d.sigma < 0) throw ConfigError(r.where(), "lognormal needs median > 0, sigma >= 0");
    return d;
  }
  if (dist == "normal") return NormalDelay{r.duration("mean"), r.duration("sd")};
  if (dist == "uniform") {
    UniformDelay d{r.duration("lo"), r.duration("hi")};
    if (d.hi < d.lo) throw ConfigError(r.where(), "uniform needs lo <= hi");
    return d;
  }
  if (dist == "pareto")
    return ParetoDelay{r.duration("mean"), r.unit("variance", [](const std::string& s) { return parse_variance_ms2(s); })};
  throw ConfigError(r.field("dist"), "unknown distribution '" + dist + "'");
}

CrossTrafficModel parse_cross_traffic(const Reader& parent, const std::string& key) {
  if (!parent.has(key)) return CrossTrafficModel::none();
  const YAML::Node n = parent.raw(key);
  if (n.IsScalar()) {
    const std::string s = n.as<std::string>();
    if (s == "none") return CrossTrafficModel::none();
    if (s == "testbed") return CrossTrafficModel::testbed_pareto();
    throw ConfigError(parent.field(key), "expected none, testbed or a mapping");
  }
  const Reader r = parent.child(key);
  const std::string kind = r.str("kind");
  CrossTrafficModel m;
  if (kind == "none") return m;
  if (kind == "constant") {
    m = CrossTrafficModel::constant(r.duration("mean"));
  } else if (kind == "pareto") {
    m = CrossTrafficModel::pareto(r.duration("mean"),
                                  r.unit("variance", [](const std::string& s) { return parse_variance_ms2(s); }));
  } else {
    throw ConfigError(r.field("kind"), "unknown cross-traffic kind '" + kind + "'");
  }
  m.coherence = r.duration("coherence", m.coherence);
  return m;
}

LinkSpec parse_link(const Reader& r, Bandwidth data_link) {
  LinkSpec l;
  const std::string cap = r.str("capacity", "data_link");
  if (cap == "data_link") {
    l.capacity = data_link;
  } else {
    try {
      l.capacity = parse_bandwidth(cap);
    } catch (const UnitError& e) {
      throw ConfigError(r.field("capacity"), e.what());
    }
  }
  l.base_latency = r.duration("latency", Duration{0});
  l.jitter_sd = r.duration("jitter", Duration{0});
  l.cross_traffic = parse_cross_traffic(r, "cross_traffic");
  l.loss = r.num<double>("loss", 0.0);
  l.reorder = r.has("reorder") && r.num<bool>("reorder");
  if (r.has("drift")) {
    const Reader d = r.child("drift");
    DriftModel dm;
    dm.sd = d.duration("sd");
    dm.period = d.duration("period", dm.period);
    l.drift = dm;
  }
  return l;
}

GPDParams parse_gpd(const Reader& r) {
  GPDParams p;
  p.shape = r.num<double>("shape");
  p.scale = to_ms(r.duration("scale"));
  p.location = to_ms(r.duration("location"));
  try {
    validate(p);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(r.where(), e.what());
  }
  return p;
}

std::map<std::size_t, DelayParamsPair> per_k_from_json(const Json& j, const std::string& where) {
  std::map<std::size_t, DelayParamsPair> out;
  if (!j.contains("per_k") || !j["per_k"].is_object()) throw ConfigError(where, "expected an object 'per_k'");
  auto gpd = [&](const Json& g, const std::string& w) {
    GPDParams p;
    try {
      p.shape = g.at("shape").get<double>();
      p.scale = g.at("scale_ms").get<double>();
      p.location = g.at("location_ms").get<double>();
      validate(p);
    } catch (const std::exception& e) {
      throw ConfigError(w, e.what());
    }
    return p;
  };
  for (const auto& [key, val] : j["per_k"].items()) {
    std::size_t k = 0;
    try {
      k = std::stoul(key);
    } catch (const std::exception&) {
      throw ConfigError(where + ".per_k", "key '" + key + "' is not a switch count");
    }
    const std::string w = where + ".per_k." + key;
    if (!val.contains("first") || !val.contains("followup")) throw ConfigError(w, "needs first and followup");
    out[k] = DelayParamsPair{gpd(val["first"], w + ".first"), gpd(val["followup"], w + ".followup")};
  }
  return out;
}

DelayElementConfig parse_defense(const Reader& r, bool& enabled, const std::filesystem::path& base_dir) {
  DelayElementConfig c;
  enabled = r.has("enabled") && r.num<bool>("enabled");
  c.t_th = r.duration("t_th", c.t_th);
  c.window = r.duration("window", c.window);
  if (r.has("first_delay")) c.first_delay = parse_gpd(r.child("first_delay"));
  if (r.has("followup_delay")) c.followup_delay = parse_gpd(r.child("followup_delay"));
  if (r.has("per_k")) {
    const Reader pk = r.child("per_k");
    for (const auto& kv : pk.node()) {
      const std::string key = kv.first.as<std::string>();
      const Reader e = pk.child(key);
      std::size_t k = 0;
      try {
        k = std::stoul(key);
      } catch (const std::exception&) {
        throw ConfigError(pk.field(key), "not a switch count");
      }
      c.per_k[k] = DelayParamsPair{parse_gpd(e.child("first")), parse_gpd(e.child("followup"))};
    }
  }
  if (r.has("fitted")) {
    std::filesystem::path f = r.str("fitted");
    if (f.is_relative() && !base_dir.empty()) f = base_dir / f;
    try {
      for (const auto& [k, p] : load_fitted_params(f)) c.per_k[k] = p;
    } catch (const IoError& e) {
      throw ConfigError(r.field("fitted"), e.what());
    }
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(r.where(), e.what());
  }
  return c;
}

Scenario parse_one(const Reader& r, const std::filesystem::path& base_dir) {
  Scenario s;
  s.name = r.str("name");
  if (s.name.empty()) throw ConfigError(r.field("name"), "must not be empty");
  if (!r.has("seed")) throw ConfigError(r.field("seed"), "missing (a seed is mandatory)");
  s.seed = r.num<std::uint64_t>("seed");
  const long long trains = r.num<long long>("trains", 450);
  if (trains <= 0) throw ConfigError(r.field("trains"), "must be >= 1");
  s.trains = static_cast<std::size_t>(trains);
  s.mtu = r.bytes("mtu", 1500);
  if (s.mtu < 64) throw ConfigError(r.field("mtu"), "must be >= 64B");
  s.train_period = r.duration("train_period", s.train_period);
  s.span = r.duration("span", s.span);
  if (s.span.count() <= 0) throw ConfigError(r.field("span"), "must be > 0");
  if (s.train_period < std::chrono::seconds(7) + s.span + std::chrono::seconds(1))
    throw ConfigError(r.field("train_period"), "shorter than one train plus its control probe");
  s.bin_width = r.duration("bin_width", s.bin_width);
  if (s.bin_width.count() <= 0) throw ConfigError(r.field("bin_width"), "must be > 0");
  s.passive_window = r.duration("passive_window", s.passive_window);
  if (s.passive_window.count() <= 0) throw ConfigError(r.field("passive_window"), "must be > 0");
  try {
    s.switch_kind = parse_switch_kind(r.str("switch_kind"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(r.field("switch_kind"), e.what());
  }
  s.data_link = r.unit("data_link", [](const std::string& v) { return parse_bandwidth(v); });
  const long long k = r.num<long long>("k");
  if (k < 0) throw ConfigError(r.field("k"), "must be >= 0");
  s.k = static_cast<std::size_t>(k);

  // Topology: client -wan-> sw1 -lab-> sw2 -lab-> ... swS -lab-> server.
  const Reader path = r.child("path");
  const long long nsw = path.num<long long>("switches", k);
  if (nsw < 0 || nsw < k) throw ConfigError(path.field("switches"), "must be >= k");
  // The *_reverse blocks are merged over their forward templates.
  const LinkSpec wan = parse_link(path.child("wan"), s.data_link);
  const LinkSpec lab = parse_link(path.child("lab_link"), s.data_link);
  const LinkSpec wan_rev =
      parse_link(Reader(merge(path.raw("wan"), path.raw("wan_reverse")), path.field("wan_reverse")), s.data_link);
  const LinkSpec lab_rev =
      parse_link(Reader(merge(path.raw("lab_link"), path.raw("lab_link_reverse")), path.field("lab_link_reverse")),
                 s.data_link);
  s.path.forward_links.push_back(wan);
  for (long long i = 0; i < nsw; ++i) s.path.forward_links.push_back(lab);
  for (long long i = 0; i < nsw; ++i) s.path.reverse_links.push_back(lab_rev);
  s.path.reverse_links.push_back(wan_rev);
  s.path.reply_size = path.bytes("reply_size", 64);
  s.path.server_turnaround = path.duration("server_turnaround", Duration{0});

  const std::string kind_key(to_string(s.switch_kind));
  const Reader kinds = r.child("switch_kinds");
  const Reader sk = kinds.child(kind_key);
  const DelayDistribution install = parse_distribution(sk.child("install_delay"));
  const auto capacity = sk.num<long long>("table_capacity", 4096);
  if (capacity <= 0) throw ConfigError(sk.field("table_capacity"), "must be > 0");
  for (long long i = 0; i < nsw; ++i)
    s.path.switches.emplace_back(kind_key + "-" + std::to_string(i + 1), s.switch_kind, static_cast<std::size_t>(i + 1),
                                 install, static_cast<std::size_t>(capacity));
  s.path.configured_count = s.k;

  if (r.has("controller")) {
    const Reader c = r.child("controller");
    if (c.has("lookup_delay")) s.controller.lookup_delay = parse_distribution(c.child("lookup_delay"));
    s.controller.clear_delay = c.duration("clear_delay", s.controller.clear_delay);
  }
  if (r.has("defense")) s.defense_config = parse_defense(r.child("defense"), s.defense_enabled, base_dir);
  if (s.defense_enabled && s.path.switches.empty()) throw ConfigError(r.field("defense"), "needs at least one switch");

  if (r.has("features")) {
    s.features.dispersion = false;
    s.features.delta_rtt_singles = false;
    bool rtt = false;
    for (const auto& f : r.raw("features")) {
      const std::string v = f.as<std::string>();
      if (v == "dispersion") s.features.dispersion = true;
      else if (v == "delta_rtt") rtt = true;
      else throw ConfigError(r.field("features"), "unknown feature '" + v + "'");
    }
    if (rtt) {
      std::vector<std::string> sources{"singles"};
      if (r.has("delta_rtt_sources")) {
        sources.clear();
        for (const auto& f : r.raw("delta_rtt_sources")) sources.push_back(f.as<std::string>());
      }
      for (const auto& v : sources) {
        if (v == "singles") s.features.delta_rtt_singles = true;
        else if (v == "pairs") s.features.delta_rtt_pairs = true;
        else throw ConfigError(r.field("delta_rtt_sources"), "unknown source '" + v + "'");
      }
    }
  }
  s.path.validate();
  return s;
}

}  // namespace

PathSpec Scenario::effective_path() const {
  if (!defense_enabled) return path;
  PathSpec p = path;
  p.delay_element = defense_config;
  return p;
}

std::vector<Scenario> parse_scenarios(const std::string& yaml_text, const std::filesystem::path& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError("", std::string("YAML: ") + e.what());
  }
  if (!root.IsMap()) throw ConfigError("", "top level must be a mapping");
  if (!root["scenarios"] || !root["scenarios"].IsSequence() || root["scenarios"].size() == 0)
    throw ConfigError("scenarios", "need a non-empty list");
  const YAML::Node defaults = root["defaults"];
  std::vector<Scenario> out;
  std::set<std::string> names;
  for (std::size_t i = 0; i < root["scenarios"].size(); ++i) {
    const std::string where = "scenarios[" + std::to_string(i) + "]";
    const YAML::Node merged = merge(defaults, root["scenarios"][i]);
    try {
      Scenario s = parse_one(Reader(merged, where), base_dir);
      if (!names.insert(s.name).second) throw ConfigError(where + ".name", "duplicate '" + s.name + "'");
      out.push_back(std::move(s));
    } catch (const YAML::Exception& e) {
      throw ConfigError(where, e.what());
    }
  }
  return out;
}

std::vector<Scenario> load_scenarios(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("--config", "cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenarios(ss.str(), file.parent_path());
}

std::map<std::size_t, DelayParamsPair> load_fitted_params(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw IoError(file.string() + ": " + e.what());
  }
  return per_k_from_json(j, file.string());
}

void save_fitted_params(const std::filesystem::path& file, const std::map<std::size_t, DelayParamsPair>& per_k) {
  Json j;
  j["per_k"] = Json::object();
  auto gpd = [](const GPDParams& p) {
    return Json{{"shape", p.shape}, {"scale_ms", p.scale}, {"location_ms", p.location}};
  };
  for (const auto& [k, p] : per_k) j["per_k"][std::to_string(k)] = {{"first", gpd(p.first)}, {"followup", gpd(p.followup)}};
  std::ofstream out(file);
  if (!out) throw IoError("cannot write " + file.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + file.string());
}

}  // namespace sdnfp
