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

#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace multiphoton::cli {
namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

double parse_real(const std::string& text, const std::string& what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
  return value;
}

int parse_steps(const std::string& text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end || value < 2) {
    throw UsageError("scan steps must be an integer >= 2, got '" + text + "'");
  }
  return value;
}

}  // namespace

ScanSpec parse_scan(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ':')) parts.push_back(trim(part));
  if (parts.size() != 4 || parts[0].empty()) {
    throw UsageError("--scan expects param:start:stop:steps, got '" + text + "'");
  }
  return ScanSpec{parts[0], parse_real(parts[1], "scan start"),
                  parse_real(parts[2], "scan stop"), parse_steps(parts[3])};
}

std::set<std::string> parse_formats(const std::string& text) {
  std::set<std::string> formats;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    part = trim(part);
    if (part != "csv" && part != "json") {
      throw UsageError("unknown output format '" + part + "' (expected csv or json)");
    }
    formats.insert(part);
  }
  if (formats.empty()) throw UsageError("--format needs at least one of csv, json");
  return formats;
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end) {
    throw UsageError("seed must be a non-negative integer, got '" + text + "'");
  }
  return value;
}

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  std::map<std::string, std::string> scan_keys;
  bool in_scan = false;
  std::stringstream stream(text);
  std::string raw;
  int line_number = 0;
  while (std::getline(stream, raw)) {
    ++line_number;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line != "[scan]") {
        throw UsageError("config line " + std::to_string(line_number) +
                         ": unknown section " + line);
      }
      in_scan = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(line_number) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) {
      throw UsageError("config line " + std::to_string(line_number) + ": empty key");
    }
    if (in_scan) {
      scan_keys[key] = value;
    } else if (key == "experiment") {
      config.experiment = value;
    } else if (key == "seed") {
      config.seed = parse_seed(value);
    } else if (key == "out") {
      config.output_dir = value;
    } else if (key == "format") {
      config.formats = parse_formats(value);
    } else {
      config.parameters[key] = value;
    }
  }
  if (!scan_keys.empty()) {
    for (const char* required : {"param", "start", "stop", "steps"}) {
      if (!scan_keys.contains(required)) {
        throw UsageError(std::string("[scan] section is missing '") + required + "'");
      }
    }
    if (scan_keys.size() != 4) throw UsageError("[scan] accepts only param, start, stop, steps");
    config.scan = ScanSpec{scan_keys["param"], parse_real(scan_keys["start"], "scan start"),
                           parse_real(scan_keys["stop"], "scan stop"),
                           parse_steps(scan_keys["steps"])};
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

RunConfig merge(RunConfig base, const RunConfig& overrides) {
  if (!overrides.experiment.empty()) base.experiment = overrides.experiment;
  for (const auto& [key, value] : overrides.parameters) base.parameters[key] = value;
  if (overrides.scan) base.scan = overrides.scan;
  if (overrides.seed) base.seed = overrides.seed;
  if (overrides.output_dir) base.output_dir = overrides.output_dir;
  if (overrides.formats) base.formats = overrides.formats;
  return base;
}

}  // namespace multiphoton::cli
