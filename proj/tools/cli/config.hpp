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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace multiphoton::cli {

/// Bad flags, unknown experiment or parameter: exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written: exit status 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanSpec {
  std::string parameter;
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
};

struct RunConfig {
  std::string experiment;
  std::map<std::string, std::string> parameters;
  std::optional<ScanSpec> scan;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::set<std::string>> formats;  // default: csv and json
};

/// "param:start:stop:steps"
ScanSpec parse_scan(const std::string& text);

/// "csv,json" or a subset.
std::set<std::string> parse_formats(const std::string& text);

std::uint64_t parse_seed(const std::string& text);

/// Flat key = value lines, '#' comments, and an optional [scan] section
/// holding param, start, stop, steps. The keys experiment, seed, out and
/// format configure the run; every other key is an experiment parameter.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

/// Values set in `overrides` win over `base`.
RunConfig merge(RunConfig base, const RunConfig& overrides);

}  // namespace multiphoton::cli
