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

#include "multiphoton/packets.hpp"

namespace multiphoton {

/// Matrix permanent by Ryser's inclusion-exclusion formula with Gray-code
/// subset updates, O(2^n n). Throws InvalidParameter for non-square input
/// and ShellOverflow above tol::kMaxPermanentSize.
Complex permanent(const ComplexMatrix& m);

/// Permutation-symmetrized normalization of a product-form N-photon state:
/// the permanent of the Gram matrix. N! for identical packets, 1 for
/// mutually orthogonal ones.
double normalization_constant(const PacketSet& packets);

}  // namespace multiphoton
