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

#include "multiphoton/scan_result.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <system_error>

namespace multiphoton {

ScanResult::ScanResult(std::string experiment, std::string parameter,
                       std::vector<std::string> observables)
    : experiment_(std::move(experiment)),
      parameter_(std::move(parameter)),
      observables_(std::move(observables)) {
  for (std::size_t i = 0; i < observables_.size(); ++i) {
    for (std::size_t j = i + 1; j < observables_.size(); ++j) {
      if (observables_[i] == observables_[j]) {
        throw std::invalid_argument("duplicate observable " + observables_[i]);
      }
    }
  }
}

void ScanResult::add_row(double parameter, std::vector<double> values) {
  if (values.size() != observables_.size()) {
    throw std::invalid_argument("ScanResult: row has " +
                                std::to_string(values.size()) + " values, expected " +
                                std::to_string(observables_.size()));
  }
  const auto pos = std::upper_bound(
      rows_.begin(), rows_.end(), parameter,
      [](double p, const Row& row) { return p < row.parameter; });
  rows_.insert(pos, Row{parameter, std::move(values)});
}

void ScanResult::set_metadata(std::string key, std::string value) {
  metadata_[std::move(key)] = std::move(value);
}

std::vector<double> ScanResult::parameters() const {
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.parameter);
  return out;
}

std::size_t ScanResult::index_of(std::string_view observable) const {
  const auto it = std::find(observables_.begin(), observables_.end(), observable);
  if (it == observables_.end()) {
    throw std::out_of_range("no observable named " + std::string(observable));
  }
  return static_cast<std::size_t>(it - observables_.begin());
}

std::vector<double> ScanResult::column(std::string_view observable) const {
  const std::size_t idx = index_of(observable);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.values[idx]);
  return out;
}

double ScanResult::value(std::size_t row, std::string_view observable) const {
  return rows_.at(row).values[index_of(observable)];
}

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string to_csv(const ScanResult& scan) {
  std::string out = scan.parameter_name();
  for (const auto& name : scan.observable_names()) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (const auto& row : scan.rows()) {
    out += format_double(row.parameter);
    for (double v : row.values) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

ScanResult parse_csv(std::string_view csv, std::string experiment_name) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < csv.size()) {
    auto end = csv.find('\n', start);
    if (end == std::string_view::npos) end = csv.size();
    auto line = csv.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty()) throw std::invalid_argument("empty CSV");

  const auto header = split_fields(lines.front());
  std::vector<std::string> observables(header.begin() + 1, header.end());
  ScanResult scan(std::move(experiment_name), std::string(header.front()),
                  std::move(observables));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i]);
    if (fields.size() != header.size()) {
      throw std::invalid_argument("CSV row " + std::to_string(i) + " has wrong width");
    }
    std::vector<double> values;
    values.reserve(fields.size() - 1);
    for (std::size_t f = 1; f < fields.size(); ++f) {
      values.push_back(parse_number(fields[f]));
    }
    scan.add_row(parse_number(fields.front()), std::move(values));
  }
  return scan;
}

}  // namespace multiphoton
