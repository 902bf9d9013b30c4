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
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "multiphoton/experiments.hpp"

namespace multiphoton::cli {

/// Typed access to the textual --param values. Every value read is recorded
/// (defaults included) for the JSON summary; finish() rejects leftovers.
class ParamReader {
 public:
  explicit ParamReader(std::map<std::string, std::string> values);

  double real(const std::string& key, double fallback);
  int integer(const std::string& key, int fallback);
  std::string text(const std::string& key, const std::string& fallback);
  std::vector<double> real_list(const std::string& key, const std::vector<double>& fallback);

  void finish() const;
  const nlohmann::ordered_json& effective() const { return effective_; }

 private:
  std::optional<std::string> take(const std::string& key);

  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
  nlohmann::ordered_json effective_ = nlohmann::ordered_json::object();
};

struct ParamSpec {
  std::string name;
  std::string kind;  // real, integer, text, list
  std::string default_value;
};

struct RunInputs {
  ParamReader& params;
  std::optional<Sweep> scan;  // already matched to scan_parameter
  std::uint64_t seed;
};

struct ExperimentEntry {
  std::string name;
  std::string anchor;
  std::string summary;
  std::vector<ParamSpec> params;
  std::string scan_parameter;  // empty when the experiment has no sweep
  Sweep default_scan;
  std::function<ExperimentReport(RunInputs&)> run;
};

/// Alphabetical by name.
const std::vector<ExperimentEntry>& registry();
const ExperimentEntry* find_experiment(std::string_view name);

/// One line per experiment: name, anchor, parameter schema, scan axis.
std::string list_experiments();

}  // namespace multiphoton::cli
