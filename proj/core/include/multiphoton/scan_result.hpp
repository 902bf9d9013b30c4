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

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace multiphoton {

/// A labeled table of (parameter -> observables) rows from one sweep.
/// Rows stay sorted by parameter value; observable names are fixed at
/// construction.
class ScanResult {
 public:
  struct Row {
    double parameter = 0.0;
    std::vector<double> values;
    friend bool operator==(const Row&, const Row&) = default;
  };

  ScanResult(std::string experiment, std::string parameter,
             std::vector<std::string> observables);

  /// Inserted after any existing rows with the same parameter. Throws
  /// std::invalid_argument when the value count does not match.
  void add_row(double parameter, std::vector<double> values);

  void set_metadata(std::string key, std::string value);

  const std::string& experiment_name() const { return experiment_; }
  const std::string& parameter_name() const { return parameter_; }
  const std::vector<std::string>& observable_names() const { return observables_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

  std::vector<double> parameters() const;
  std::vector<double> column(std::string_view observable) const;
  double value(std::size_t row, std::string_view observable) const;

  friend bool operator==(const ScanResult&, const ScanResult&) = default;

 private:
  std::size_t index_of(std::string_view observable) const;

  std::string experiment_;
  std::string parameter_;
  std::vector<std::string> observables_;
  std::vector<Row> rows_;
  std::map<std::string, std::string> metadata_;
};

/// Shortest decimal that round-trips through strtod; locale independent.
std::string format_double(double value);

/// Header row: parameter name then observable names; one row per scan row.
std::string to_csv(const ScanResult& scan);

/// Inverse of to_csv (metadata is not part of the CSV).
ScanResult parse_csv(std::string_view csv, std::string experiment_name);

}  // namespace multiphoton
