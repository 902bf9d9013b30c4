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

#include <cstddef>
#include <functional>

#include "multiphoton/packets.hpp"

namespace multiphoton {

/// Uniform sampling axis: start, start + step, ..., start + (points-1) step.
struct FrequencyAxis {
  double start = 0.0;
  double step = 1.0;
  std::size_t points = 0;

  double at(std::size_t i) const { return start + step * static_cast<double>(i); }

  /// `points` samples spanning [center - half_width, center + half_width].
  static FrequencyAxis centered(double center, double half_width, std::size_t points);

  friend bool operator==(const FrequencyAxis&, const FrequencyAxis&) = default;
};

/// Two-photon spectral amplitude sampled on a rectangular grid:
/// grid(i, j) = Phi(first.at(i), second.at(j)).
class JointAmplitude {
 public:
  JointAmplitude(ComplexMatrix grid, FrequencyAxis first, FrequencyAxis second);

  static JointAmplitude sample(const std::function<Complex(double, double)>& phi,
                               const FrequencyAxis& first,
                               const FrequencyAxis& second);

  /// phi_a(w1) phi_b(w2), sampled on `points` per axis spanning +-7 sigma
  /// around both packet centers.
  static JointAmplitude separable(const GaussianPacket& a, const GaussianPacket& b,
                                  std::size_t points = 128);

  const ComplexMatrix& grid() const { return grid_; }
  const FrequencyAxis& first() const { return first_; }
  const FrequencyAxis& second() const { return second_; }

  /// sum |Phi|^2 dw1 dw2.
  double norm() const;

  /// Every other sample along both axes.
  JointAmplitude decimated() const;

 private:
  ComplexMatrix grid_;
  FrequencyAxis first_;
  FrequencyAxis second_;
};

/// Two-pair functionals of a product four-photon amplitude
/// Phi_4(w1, w2, w1', w2') = Phi_a(w1, w2) Phi_b(w1', w2'):
///   A = int |Phi_4|^2,
///   E = int Phi_4(w1, w2, w1', w2') Phi_4^*(w1, w2', w1', w2).
/// E/A = 1 for indistinguishable pairs, 0 for fully distinguishable ones.
struct PairQuantities {
  double a = 0.0;
  double e = 0.0;
  double ratio() const { return e / a; }
};

enum class ConvergenceCheck { kEnabled, kSkip };

/// Both pairs share `pair`. E is evaluated as Tr[(M M^dag)^2] dw1^2 dw2^2,
/// A as I^2. With the check enabled the grid is also evaluated at half
/// resolution; a change in A or E above 0.5% of A throws ResolutionError
/// (as does a grid with fewer than 8 points per axis).
PairQuantities pair_quantities(const JointAmplitude& pair,
                               ConvergenceCheck check = ConvergenceCheck::kEnabled);

/// Two different pairs on identical grids:
/// E = Tr[(M_a^T M_a^*)(M_b^T M_b^*)] dw1^2 dw2^2, A = I_a I_b.
PairQuantities pair_quantities(const JointAmplitude& first_pair,
                               const JointAmplitude& second_pair,
                               ConvergenceCheck check = ConvergenceCheck::kEnabled);

/// Two-photon exchange visibility
///   V = int Phi^*(w1, w2) Phi(w2, w1) / int |Phi|^2.
/// Requires both axes to coincide (InvalidParameter otherwise). Throws
/// std::domain_error if the imaginary part exceeds tol::kImaginaryResidue.
double hom_visibility(const JointAmplitude& phi);

}  // namespace multiphoton
