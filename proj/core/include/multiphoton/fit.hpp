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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace multiphoton {

struct FitParameter {
  std::string name;
  double value = 0.0;
  double std_error = 0.0;
};

/// Result of fitting offset + a cos(k x') + b sin(k x'), x' = 2 pi x / period.
struct FitSummary {
  std::string model;
  int harmonic = 1;
  std::vector<FitParameter> parameters;  // offset, cos, sin, amplitude, phase
  double residual_norm = 0.0;
  double period = 0.0;       // base_period / harmonic
  double visibility = 0.0;   // amplitude / offset
  /// Amplitude of harmonics 1..max from a joint Fourier fit (index 0 is
  /// harmonic 1). Empty when not computed.
  std::vector<double> harmonic_amplitudes;
  /// Largest amplitude among harmonics below `harmonic`, relative to the
  /// principal one.
  double max_subharmonic_ratio = 0.0;

  const FitParameter& parameter(std::string_view name) const;
};

struct LinearFit {
  Eigen::VectorXd coefficients;
  Eigen::VectorXd std_errors;
  double residual_norm = 0.0;
};

/// Ordinary least squares with standard errors from the residual variance.
LinearFit linear_least_squares(const Eigen::MatrixXd& design,
                               const Eigen::VectorXd& observations);

/// Single-harmonic fit at fixed k.
FitSummary fit_cosine(std::span<const double> x, std::span<const double> y,
                      int harmonic, double base_period);

/// Fits every k in 1..max_harmonic, keeps the one with the smallest
/// residual, then measures harmonic content with a joint fit of all
/// harmonics up to max_harmonic.
FitSummary fit_fringe(std::span<const double> x, std::span<const double> y,
                      int max_harmonic, double base_period);

/// Histogram fit of a density c (1 + V cos(2 pi (x - x0) / period)) on
/// [0, period): the regressors are averaged over each bin, so binning does
/// not bias the visibility.
FitSummary fit_binned_fringe(std::span<const double> counts, double period);

}  // namespace multiphoton
