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

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "config.hpp"
#include "multiphoton/experiments.hpp"

namespace multiphoton::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitInternal = 4;

/// Writes to a sibling temporary file, then renames over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& content);

nlohmann::ordered_json summary_json(const std::string& experiment,
                                    const nlohmann::ordered_json& parameters,
                                    const ExperimentReport& report);

/// Runs one experiment and writes its outputs; returns the exit status.
int run_experiment(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: `list` or `run ...`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multiphoton::cli
