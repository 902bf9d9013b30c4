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

#include "multiphoton/fit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "multiphoton/errors.hpp"

namespace multiphoton {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

FitSummary summarize(const LinearFit& fit, int harmonic, double base_period,
                     std::string model) {
  const double offset = fit.coefficients(0);
  const double a = fit.coefficients(1);
  const double b = fit.coefficients(2);
  const double amplitude = std::hypot(a, b);
  double amplitude_error = 0.0;
  double phase_error = 0.0;
  if (amplitude > 0.0) {
    const double sa = fit.std_errors(1);
    const double sb = fit.std_errors(2);
    amplitude_error = std::hypot(a * sa, b * sb) / amplitude;
    phase_error = std::hypot(b * sa, a * sb) / (amplitude * amplitude);
  }
  FitSummary summary;
  summary.model = std::move(model);
  summary.harmonic = harmonic;
  // y = offset + amplitude * cos(k x' + phase)
  summary.parameters = {
      {"offset", offset, fit.std_errors(0)},
      {"cos", a, fit.std_errors(1)},
      {"sin", b, fit.std_errors(2)},
      {"amplitude", amplitude, amplitude_error},
      {"phase", std::atan2(-b, a), phase_error},
  };
  summary.residual_norm = fit.residual_norm;
  summary.period = base_period / harmonic;
  summary.visibility = offset != 0.0 ? amplitude / offset : 0.0;
  return summary;
}

void check_samples(std::span<const double> x, std::span<const double> y,
                   std::size_t parameters) {
  if (x.size() != y.size()) {
    throw InvalidParameter("fit: x and y differ in length");
  }
  if (x.size() <= parameters) {
    throw InvalidParameter("fit: not enough samples for the model");
  }
}

}  // namespace

const FitParameter& FitSummary::parameter(std::string_view name) const {
  for (const auto& p : parameters) {
    if (p.name == name) return p;
  }
  throw std::out_of_range("no fit parameter named " + std::string(name));
}

LinearFit linear_least_squares(const Eigen::MatrixXd& design,
                               const Eigen::VectorXd& observations) {
  const auto rows = design.rows();
  const auto cols = design.cols();
  if (observations.size() != rows || rows < cols) {
    throw InvalidParameter("linear_least_squares: bad dimensions");
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < cols) {
    throw InvalidParameter("linear_least_squares: rank-deficient design");
  }
  LinearFit fit;
  fit.coefficients = qr.solve(observations);
  const Eigen::VectorXd residual = observations - design * fit.coefficients;
  fit.residual_norm = residual.norm();
  const double dof = static_cast<double>(rows - cols);
  const double variance = dof > 0 ? residual.squaredNorm() / dof : 0.0;
  const Eigen::MatrixXd normal = design.transpose() * design;
  const Eigen::MatrixXd covariance = variance * normal.inverse();
  fit.std_errors = covariance.diagonal().cwiseMax(0.0).cwiseSqrt();
  return fit;
}

FitSummary fit_cosine(std::span<const double> x, std::span<const double> y,
                      int harmonic, double base_period) {
  check_samples(x, y, 3);
  if (harmonic < 1 || !(base_period > 0.0)) {
    throw InvalidParameter("fit_cosine: harmonic >= 1 and period > 0 required");
  }
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd obs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double arg = kTwoPi * harmonic * x[i] / base_period;
    design(i, 0) = 1.0;
    design(i, 1) = std::cos(arg);
    design(i, 2) = std::sin(arg);
    obs(i) = y[i];
  }
  return summarize(linear_least_squares(design, obs), harmonic, base_period,
                   "offset+amplitude*cos(k*phi)");
}

FitSummary fit_fringe(std::span<const double> x, std::span<const double> y,
                      int max_harmonic, double base_period) {
  if (max_harmonic < 1) throw InvalidParameter("fit_fringe: max_harmonic >= 1");
  check_samples(x, y, static_cast<std::size_t>(2 * max_harmonic + 1));

  FitSummary best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= max_harmonic; ++k) {
    FitSummary candidate = fit_cosine(x, y, k, base_period);
    // Strict comparison keeps the lowest k among numerically equal fits.
    if (candidate.residual_norm < best_residual * (1.0 - 1e-9) ||
        best_residual == std::numeric_limits<double>::infinity()) {
      best_residual = candidate.residual_norm;
      best = std::move(candidate);
    }
  }

  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd design(n, 2 * max_harmonic + 1);
  Eigen::VectorXd obs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    for (int k = 1; k <= max_harmonic; ++k) {
      const double arg = kTwoPi * k * x[i] / base_period;
      design(i, 2 * k - 1) = std::cos(arg);
      design(i, 2 * k) = std::sin(arg);
    }
    obs(i) = y[i];
  }
  const LinearFit joint = linear_least_squares(design, obs);
  best.harmonic_amplitudes.clear();
  for (int k = 1; k <= max_harmonic; ++k) {
    best.harmonic_amplitudes.push_back(
        std::hypot(joint.coefficients(2 * k - 1), joint.coefficients(2 * k)));
  }
  const double principal = best.harmonic_amplitudes[best.harmonic - 1];
  double worst = 0.0;
  for (int k = 1; k < best.harmonic; ++k) {
    worst = std::max(worst, best.harmonic_amplitudes[k - 1]);
  }
  best.max_subharmonic_ratio = principal > 0.0 ? worst / principal : 0.0;
  return best;
}

FitSummary fit_binned_fringe(std::span<const double> counts, double period) {
  if (counts.size() < 4 || !(period > 0.0)) {
    throw InvalidParameter("fit_binned_fringe: need >= 4 bins and period > 0");
  }
  const auto n = static_cast<Eigen::Index>(counts.size());
  const double width = period / static_cast<double>(n);
  const double scale = period / (kTwoPi * width);
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd obs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lo = kTwoPi * static_cast<double>(i) * width / period;
    const double hi = kTwoPi * static_cast<double>(i + 1) * width / period;
    design(i, 0) = 1.0;
    design(i, 1) = scale * (std::sin(hi) - std::sin(lo));
    design(i, 2) = scale * (std::cos(lo) - std::cos(hi));
    obs(i) = counts[i];
  }
  return summarize(linear_least_squares(design, obs), 1, period,
                   "offset+amplitude*cos(2*pi*x/L) (bin-averaged)");
}

}  // namespace multiphoton
