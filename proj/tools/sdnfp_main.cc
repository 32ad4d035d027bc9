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


// sdnfp: command-line front end for the fingerprinting lab.
//
//   sdnfp report   --config configs/scenarios.yaml --out out/
//   sdnfp simulate --config ... --scenario k3-hw-100m --out out/
//   sdnfp extract  --trace out/k3-hw-100m/trace.csv --out samples.csv
//   sdnfp eer      --samples samples.csv --out out/eer
//   sdnfp fit      --config ... --out fitted.json
//   sdnfp defend   --config ... [--fitted fitted.json] --out out/defended
//
// Exit status: 0 on success, 2 on configuration errors, 1 otherwise.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdnfp/errors.h"
#include "sdnfp/experiment/report.h"
#include "sdnfp/experiment/runner.h"
#include "sdnfp/experiment/scenario.h"
#include "sdnfp/features/features.h"
#include "sdnfp/probes/passive.h"
#include "sdnfp/probes/trace.h"
#include "sdnfp/stats/gpd.h"

namespace {

using namespace sdnfp;

struct Common {
  std::string config;
  std::vector<std::string> scenarios;
  std::optional<std::uint64_t> seed;
  std::string out = "out";
  std::string format = "csv";
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, Common& c, bool needs_config) {
  auto* opt = cmd->add_option("--config", c.config, "Scenario YAML file");
  if (needs_config) opt->required();
  cmd->add_option("--scenario", c.scenarios, "Only run scenarios with these names");
  cmd->add_option("--seed", c.seed, "Override every scenario's seed");
  cmd->add_option("--out", c.out, "Output directory");
  cmd->add_option("--format", c.format, "Summary format: csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

std::vector<Scenario> select(const Common& c) {
  std::vector<Scenario> all = load_scenarios(c.config);
  std::vector<Scenario> out;
  for (auto& s : all) {
    if (!c.scenarios.empty() && std::find(c.scenarios.begin(), c.scenarios.end(), s.name) == c.scenarios.end())
      continue;
    if (c.seed) s.seed = *c.seed;
    out.push_back(std::move(s));
  }
  for (const auto& name : c.scenarios) {
    if (std::none_of(out.begin(), out.end(), [&](const Scenario& s) { return s.name == name; }))
      throw ConfigError("--scenario", "no scenario named '" + name + "'");
  }
  return out;
}

void print_summary(const std::vector<ResultBundle>& bundles) {
  std::printf("%-24s %-10s %-8s %9s %13s %6s %6s %5s\n", "scenario", "feature", "defended", "EER(%)", "threshold(ms)",
              "N", "Y", "t-1%");
  for (const auto& b : bundles) {
    for (const auto& r : b.results) {
      std::printf("%-24s %-10s %-8s %9.2f %13.3f %6zu %6zu %5s\n", b.scenario.c_str(),
                  std::string(to_string(r.feature)).c_str(), b.defended ? "yes" : "no", r.eer ? 100 * r.eer->eer : -1.0,
                  r.eer ? r.eer->threshold : 0.0, r.n_count, r.y_count,
                  r.ttest ? (r.ttest->significant_at_1pct ? "yes" : "no") : "n/a");
    }
  }
}

std::vector<ResultBundle> run_and_write(const std::vector<Scenario>& scenarios, const Common& c) {
  auto bundles = run_scenarios(scenarios, c.threads);
  for (const auto& b : bundles) write_bundle(b, std::filesystem::path(c.out) / b.scenario);
  emit_report(bundles, c.out, parse_report_format(c.format));
  print_summary(bundles);
  return bundles;
}


int run(int argc, char** argv) {
  CLI::App app{"Timing fingerprinting lab for SDN rule installation"};
  app.require_subcommand(1);

  Common c;
  auto* simulate = app.add_subcommand("simulate", "Run probe trains and write traces");
  add_common(simulate, c, true);
  bool sim_defended = false;
  simulate->add_flag("--defended", sim_defended, "Enable the delay element");

  std::string trace_file, samples_out, passive_window;
  auto* extract = app.add_subcommand("extract", "Turn a trace into labeled feature samples");
  extract->add_option("--trace", trace_file, "Trace CSV")->required();
  extract->add_option("--out", samples_out, "Samples CSV (default: stdout)");
  extract->add_option("--passive", passive_window, "Pair same-flow packets within this window (e.g. 1s)");
  extract->add_option("--config", c.config, "Scenario YAML supplying the context columns");
  extract->add_option("--scenario", c.scenarios, "Scenario name for the context columns");

  std::string samples_file, bin_width = "0.1ms";
  auto* eer = app.add_subcommand("eer", "EER, threshold and t-test from a samples CSV");
  eer->add_option("--samples", samples_file, "Samples CSV")->required();
  eer->add_option("--out", c.out, "Output directory");
  eer->add_option("--bin-width", bin_width, "Histogram bin width");

  auto* fit = app.add_subcommand("fit", "Fit per-k delay distributions to undefended Y populations");
  add_common(fit, c, true);

  std::string fitted;
  auto* defend = app.add_subcommand("defend", "Run scenarios with the delay element enabled");
  add_common(defend, c, true);
  defend->add_option("--fitted", fitted, "Per-k parameter file written by 'fit'");

  auto* report = app.add_subcommand("report", "Run scenarios as configured and write the summary");
  add_common(report, c, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (simulate->parsed()) {
    auto scenarios = select(c);
    if (sim_defended)
      for (auto& s : scenarios) s.defense_enabled = true;
    for (const auto& s : scenarios) {
      ResultBundle b = run_scenario(s);
      std::ostringstream os;
      write_trace_csv(os, b.trace);
      write_file(std::filesystem::path(c.out) / s.name / "trace.csv", os.str());
      std::printf("%s: %zu packets\n", s.name.c_str(), b.trace.size());
    }
    return 0;
  }

  if (extract->parsed()) {
    std::ifstream in(trace_file);
    if (!in) throw IoError("cannot open " + trace_file);
    const Trace trace = read_trace_csv(in);
    ScenarioContext ctx;
    FeatureOptions fo;
    if (!c.config.empty()) {
      const auto scenarios = select(c);
      if (scenarios.size() != 1) throw ConfigError("--scenario", "name exactly one scenario for the context");
      ctx = scenarios[0].context();
      fo = scenarios[0].features;
    }
    FeatureSet set;
    if (!passive_window.empty()) {
      Duration w;
      try {
        w = parse_duration(passive_window);
      } catch (const UnitError& e) {
        throw ConfigError("--passive", e.what());
      }
      ctx.span = w;
      const auto pairs = extract_passive_pairs(trace, w);
      set = passive_delta_rtt(trace, pairs, ctx);
    } else {
      set = label_samples(trace, ctx, fo);
    }
    std::ostringstream os;
    write_samples_csv(os, set.samples);
    if (samples_out.empty()) std::cout << os.str();
    else write_file(samples_out, os.str());
    std::fprintf(stderr, "%zu samples, %zu missing reply, %zu ambiguous\n", set.samples.size(), set.missing_reply,
                 set.ambiguous);
    return 0;
  }

  if (eer->parsed()) {
    std::ifstream in(samples_file);
    if (!in) throw IoError("cannot open " + samples_file);
    ResultBundle b;
    b.scenario = std::filesystem::path(samples_file).stem().string();
    b.samples.samples = read_samples_csv(in);
    if (!b.samples.samples.empty()) b.context = b.samples.samples.front().context;
    Duration w;
    try {
      w = parse_duration(bin_width);
    } catch (const UnitError& e) {
      throw ConfigError("--bin-width", e.what());
    }
    FeatureOptions fo;
    fo.dispersion = b.samples.count(Feature::kDispersion, Label::kN) + b.samples.count(Feature::kDispersion, Label::kY) > 0;
    fo.delta_rtt_singles =
        b.samples.count(Feature::kDeltaRtt, Label::kN) + b.samples.count(Feature::kDeltaRtt, Label::kY) > 0;
    b.results = evaluate(b.samples, fo, w);
    const std::vector<ResultBundle> one{b};
    write_file(std::filesystem::path(c.out) / "result.json", result_json(b));
    emit_report(one, c.out, ReportFormat::kCsv);
    print_summary(one);
    return 0;
  }

  if (fit->parsed()) {
    auto scenarios = select(c);
    for (auto& s : scenarios) s.defense_enabled = false;
    const auto bundles = run_scenarios(scenarios, c.threads);
    std::map<std::size_t, DelayParamsPair> per_k;
    for (const auto& b : bundles) {
      std::vector<double> rtt, disp;
      for (Duration d : b.samples.values(Feature::kDeltaRtt, Label::kY)) rtt.push_back(to_ms(d));
      for (Duration d : b.samples.values(Feature::kDispersion, Label::kY)) disp.push_back(to_ms(d));
      const GPDFit f1 = fit_gpd(rtt);
      const GPDFit f2 = fit_gpd(disp);
      if (per_k.count(b.context.k))
        std::fprintf(stderr, "warning: k=%zu fitted by several scenarios; keeping %s\n", b.context.k,
                     b.scenario.c_str());
      per_k[b.context.k] = {f1.params, f2.params};
      std::printf("%s k=%zu delta_rtt: xi=%.4f sigma=%.4f mu=%.4f ks=%.4f | dispersion: xi=%.4f sigma=%.4f mu=%.4f ks=%.4f\n",
                  b.scenario.c_str(), b.context.k, f1.params.shape, f1.params.scale, f1.params.location, f1.ks,
                  f2.params.shape, f2.params.scale, f2.params.location, f2.ks);
    }
    std::filesystem::path out = c.out;
    if (out.extension() != ".json") out /= "fitted.json";
    if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
    save_fitted_params(out, per_k);
    return 0;
  }

  if (defend->parsed()) {
    auto scenarios = select(c);
    std::map<std::size_t, DelayParamsPair> per_k;
    if (!fitted.empty()) {
      try {
        per_k = load_fitted_params(fitted);
      } catch (const IoError& e) {
        throw ConfigError("--fitted", e.what());
      }
    }
    for (auto& s : scenarios) {
      s.defense_enabled = true;
      for (const auto& [k, p] : per_k) s.defense_config.per_k[k] = p;
    }
    run_and_write(scenarios, c);
    return 0;
  }

  if (report->parsed()) {
    run_and_write(select(c), c);
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sdnfp::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
