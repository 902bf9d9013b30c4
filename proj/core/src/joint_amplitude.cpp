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

#include "multiphoton/joint_amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "multiphoton/errors.hpp"
#include "multiphoton/tolerances.hpp"

namespace multiphoton {

namespace {

constexpr double kConvergenceTolerance = 0.005;
constexpr std::size_t kMinCheckedPoints = 8;

PairQuantities raw_quantities(const JointAmplitude& a, const JointAmplitude& b) {
  const double cell = a.first().step * a.second().step;
  const ComplexMatrix& ma = a.grid();
  const ComplexMatrix& mb = b.grid();
  double e = 0.0;
  if (&a == &b) {
    const ComplexMatrix g = ma * ma.adjoint();
    e = g.squaredNorm();  // Tr(G^2) for Hermitian G
  } else {
    const ComplexMatrix h = ma.transpose() * ma.conjugate();
    const ComplexMatrix k = mb.transpose() * mb.conjugate();
    e = (h * k).trace().real();
  }
  return {a.norm() * b.norm(), e * cell * cell};
}

void require_checkable(const JointAmplitude& j) {
  if (j.first().points < kMinCheckedPoints || j.second().points < kMinCheckedPoints) {
    throw ResolutionError("grid too coarse for the resolution check");
  }
}

void check_converged(const PairQuantities& fine, const PairQuantities& coarse) {
  const double scale = fine.a;
  if (std::abs(fine.a - coarse.a) > kConvergenceTolerance * scale ||
      std::abs(fine.e - coarse.e) > kConvergenceTolerance * scale) {
    throw ResolutionError("pair quantities not converged: A " +
                          std::to_string(coarse.a) + " -> " + std::to_string(fine.a) +
                          ", E " + std::to_string(coarse.e) + " -> " +
                          std::to_string(fine.e));
  }
}

}  // namespace

FrequencyAxis FrequencyAxis::centered(double center, double half_width,
                                      std::size_t points) {
  if (points < 2) throw InvalidParameter("axis needs at least two points");
  if (!(half_width > 0.0)) throw InvalidParameter("axis half width must be positive");
  return {center - half_width, 2.0 * half_width / static_cast<double>(points - 1), points};
}

JointAmplitude::JointAmplitude(ComplexMatrix grid, FrequencyAxis first,
                               FrequencyAxis second)
    : grid_(std::move(grid)), first_(first), second_(second) {
  if (static_cast<std::size_t>(grid_.rows()) != first_.points ||
      static_cast<std::size_t>(grid_.cols()) != second_.points) {
    throw InvalidParameter("grid shape does not match its axes");
  }
  if (!(first_.step > 0.0 && second_.step > 0.0)) {
    throw InvalidParameter("axis steps must be positive");
  }
  if (!(norm() > 0.0) || !std::isfinite(norm())) {
    throw InvalidParameter("joint amplitude must have finite, non-zero norm");
  }
}

JointAmplitude JointAmplitude::sample(const std::function<Complex(double, double)>& phi,
                                      const FrequencyAxis& first,
                                      const FrequencyAxis& second) {
  ComplexMatrix grid(static_cast<Eigen::Index>(first.points),
                     static_cast<Eigen::Index>(second.points));
  for (std::size_t i = 0; i < first.points; ++i) {
    for (std::size_t j = 0; j < second.points; ++j) {
      grid(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          phi(first.at(i), second.at(j));
    }
  }
  return JointAmplitude(std::move(grid), first, second);
}

JointAmplitude JointAmplitude::separable(const GaussianPacket& a,
                                         const GaussianPacket& b,
                                         std::size_t points) {
  // |phi|^2 outside +-7 sigma carries about 3e-12 of the norm.
  constexpr double kSpan = 7.0;
  const double lo = std::min(a.center_frequency - kSpan * a.bandwidth,
                             b.center_frequency - kSpan * b.bandwidth);
  const double hi = std::max(a.center_frequency + kSpan * a.bandwidth,
                             b.center_frequency + kSpan * b.bandwidth);
  const auto axis = FrequencyAxis::centered(0.5 * (lo + hi), 0.5 * (hi - lo), points);
  return sample([&](double w1, double w2) { return a.amplitude(w1) * b.amplitude(w2); },
                axis, axis);
}

double JointAmplitude::norm() const {
  return grid_.squaredNorm() * first_.step * second_.step;
}

JointAmplitude JointAmplitude::decimated() const {
  const std::size_t r = (first_.points + 1) / 2;
  const std::size_t c = (second_.points + 1) / 2;
  ComplexMatrix coarse(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      coarse(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          grid_(static_cast<Eigen::Index>(2 * i), static_cast<Eigen::Index>(2 * j));
    }
  }
  return JointAmplitude(std::move(coarse), {first_.start, 2.0 * first_.step, r},
                        {second_.start, 2.0 * second_.step, c});
}

PairQuantities pair_quantities(const JointAmplitude& pair, ConvergenceCheck check) {
  const PairQuantities fine = raw_quantities(pair, pair);
  if (check == ConvergenceCheck::kEnabled) {
    require_checkable(pair);
    const JointAmplitude coarse = pair.decimated();
    check_converged(fine, raw_quantities(coarse, coarse));
  }
  return fine;
}

PairQuantities pair_quantities(const JointAmplitude& first_pair,
                               const JointAmplitude& second_pair,
                               ConvergenceCheck check) {
  if (!(first_pair.first() == second_pair.first()) ||
      !(first_pair.second() == second_pair.second())) {
    throw InvalidParameter("both pairs must be sampled on the same grid");
  }
  const PairQuantities fine = raw_quantities(first_pair, second_pair);
  if (check == ConvergenceCheck::kEnabled) {
    require_checkable(first_pair);
    const JointAmplitude ca = first_pair.decimated();
    const JointAmplitude cb = second_pair.decimated();
    check_converged(fine, raw_quantities(ca, cb));
  }
  return fine;
}

double hom_visibility(const JointAmplitude& phi) {
  if (!(phi.first() == phi.second())) {
    throw InvalidParameter("exchange visibility needs identical frequency axes");
  }
  const ComplexMatrix& m = phi.grid();
  const Complex exchange = (m.conjugate().cwiseProduct(m.transpose())).sum();
  const double norm = m.squaredNorm();
  const Complex v = exchange / norm;
  if (std::abs(v.imag()) > tol::kImaginaryResidue) {
    throw std::domain_error("exchange visibility has imaginary part " +
                            std::to_string(v.imag()));
  }
  return v.real();
}

}  // namespace multiphoton
