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

namespace multiphoton::tol {

/// Amplitudes with magnitude below this are dropped from sparse states.
inline constexpr double kPrune = 1e-14;

/// A state flagged `normalized` must satisfy |<s|s> - 1| below this.
inline constexpr double kNormalization = 1e-12;

/// Closed-form (exact algebra) comparisons.
inline constexpr double kExact = 1e-12;

/// Comparisons involving quadrature or iterative numerics.
inline constexpr double kNumeric = 1e-9;

/// Smallest Gram-matrix eigenvalue accepted (and clipped to zero).
inline constexpr double kGramEigenFloor = -1e-10;

/// Residual imaginary part tolerated in quantities reported as real.
inline constexpr double kImaginaryResidue = 1e-9;

/// Photon-number shell limit for dense enumeration and embedding.
inline constexpr int kMaxShell = 8;

/// Largest matrix accepted by the permanent kernel.
inline constexpr std::size_t kMaxPermanentSize = 12;

}  // namespace multiphoton::tol
