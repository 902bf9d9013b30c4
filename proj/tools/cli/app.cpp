// Copyright 2026 The multiphoton Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "app.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <system_error>
#include <vector>

#include <CLI11.hpp>

#include "multiphoton/errors.hpp"
#include "registry.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <unistd.h>
#endif

namespace multiphoton::cli {
namespace fs = std::filesystem;

void write_atomically(const fs::path& path, const std::string& content) {
  fs::path temp = path;
#if defined(__unix__) || defined(__APPLE__)
  temp += ".tmp." + std::to_string(::getpid());
#else
  temp += ".tmp";
#endif
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + temp.string() + " for writing");
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    file.flush();
    if (!file) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw IoError("failed writing " + temp.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(temp, ignored);
    throw IoError("cannot rename " + temp.string() + " to " + path.string() + ": " +
                  ec.message());
  }
}

nlohmann::ordered_json summary_json(const std::string& experiment,
                                    const nlohmann::ordered_json& parameters,
                                    const ExperimentReport& report) {
  nlohmann::ordered_json doc;
  doc["experiment"] = experiment;
  doc["parameters"] = parameters;
  doc["pass"] = report.passed();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"tolerance", c.tolerance},
                      {"pass", c.passed()}});
  }
  doc["checks"] = std::move(checks);
  auto results = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.parameters) results[key] = value;
  doc["results"] = std::move(results);
  if (report.fit) {
    const FitSummary& fit = *report.fit;
    nlohmann::ordered_json f;
    f["model"] = fit.model;
    f["harmonic"] = fit.harmonic;
    f["period"] = fit.period;
    f["visibility"] = fit.visibility;
    f["residual_norm"] = fit.residual_norm;
    f["max_subharmonic_ratio"] = fit.max_subharmonic_ratio;
    auto params = nlohmann::ordered_json::array();
    for (const auto& p : fit.parameters) {
      params.push_back({{"name", p.name}, {"value", p.value}, {"std_error", p.std_error}});
    }
    f["parameters"] = std::move(params);
    doc["fit"] = std::move(f);
  }
  if (!report.scan.metadata().empty()) doc["metadata"] = report.scan.metadata();
  return doc;
}

namespace {

fs::path output_directory(const RunConfig& config) {
  if (config.output_dir) return *config.output_dir;
  if (const char* env = std::getenv("MULTIPHOTON_OUT"); env && *env) return env;
  return fs::current_path();
}

int execute(const RunConfig& config, std::ostream& out) {
  if (config.experiment.empty()) throw UsageError("no experiment given (use --experiment)");
  const ExperimentEntry* entry = find_experiment(config.experiment);
  if (!entry) {
    throw UsageError("unknown experiment '" + config.experiment +
                     "'; run `multiphoton list` for the available ones");
  }
  std::optional<Sweep> sweep;
  if (config.scan) {
    if (entry->scan_parameter.empty()) {
      throw UsageError(entry->name + " does not take a --scan");
    }
    if (config.scan->parameter != entry->scan_parameter) {
      throw UsageError(entry->name + " scans '" + entry->scan_parameter + "', not '" +
                       config.scan->parameter + "'");
    }
    sweep = Sweep{config.scan->start, config.scan->stop, config.scan->steps};
  }
  const std::uint64_t seed = config.seed.value_or(1);

  ParamReader reader(config.parameters);
  RunInputs inputs{reader, sweep, seed};
  ExperimentReport report = entry->run(inputs);
  reader.finish();

  nlohmann::ordered_json parameters = reader.effective();
  if (!entry->scan_parameter.empty()) {
    const auto& s = sweep ? *sweep : entry->default_scan;
    parameters["scan"] = {{"param", entry->scan_parameter},
                          {"start", s.start},
                          {"stop", s.stop},
                          {"steps", s.steps}};
  }
  parameters["seed"] = seed;

  const fs::path dir = output_directory(config);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  const auto formats = config.formats.value_or(std::set<std::string>{"csv", "json"});
  if (formats.contains("csv")) {
    write_atomically(dir / (entry->name + ".csv"), to_csv(report.scan));
  }
  if (formats.contains("json")) {
    write_atomically(dir / (entry->name + ".summary.json"),
                     summary_json(entry->name, parameters, report).dump(2) + "\n");
  }

  for (const auto& c : report.checks) {
    out << (c.passed() ? "pass  " : "FAIL  ") << c.name << "  expected=" << format_double(c.expected)
        << " actual=" << format_double(c.actual) << " tolerance=" << format_double(c.tolerance)
        << '\n';
  }
  const bool passed = report.passed();
  out << entry->name << ": " << (passed ? "PASS" : "FAIL") << " (" << report.checks.size()
      << " checks) -> " << dir.string() << '\n';
  return passed ? kExitSuccess : kExitChecksFailed;
}

}  // namespace

int run_experiment(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return execute(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TruncationViolation& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ShellOverflow& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-photon interference experiments"};
  app.name("multiphoton");
  app.require_subcommand(1);

  app.add_subcommand("list", "List experiments with parameters and anchors");

  auto* run = app.add_subcommand("run", "Run one experiment and write CSV/JSON outputs");
  std::string experiment, scan, seed, out_dir, format, config_file;
  std::vector<std::string> params;
  run->add_option("-e,--experiment", experiment, "Experiment name (see `list`)");
  run->add_option("-p,--param", params, "Parameter override key=value (repeatable)");
  run->add_option("--scan", scan, "Sweep param:start:stop:steps");
  run->add_option("--seed", seed, "RNG seed for Monte Carlo experiments");
  run->add_option("--out", out_dir, "Output directory (default $MULTIPHOTON_OUT or .)");
  run->add_option("--format", format, "Comma-separated subset of csv,json");
  run->add_option("-c,--config", config_file, "Key = value config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  if (app.got_subcommand("list")) {
    out << list_experiments();
    return kExitSuccess;
  }

  RunConfig config;
  try {
    RunConfig flags;
    flags.experiment = experiment;
    for (const auto& kv : params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw UsageError("--param expects key=value, got '" + kv + "'");
      }
      flags.parameters[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (!scan.empty()) flags.scan = parse_scan(scan);
    if (!seed.empty()) flags.seed = parse_seed(seed);
    if (!out_dir.empty()) flags.output_dir = out_dir;
    if (!format.empty()) flags.formats = parse_formats(format);
    config = config_file.empty() ? flags : merge(load_config(config_file), flags);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run_experiment(config, out, err);
}

}  // namespace multiphoton::cli
