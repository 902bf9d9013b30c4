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
#include <map>
#include <span>

#include "multiphoton/fock.hpp"
#include "multiphoton/linear_optics.hpp"
#include "multiphoton/packets.hpp"

namespace multiphoton {

/// Orthonormal internal-mode expansion of a packet set: photon i occupies
/// sum_k coefficients(i, k) |e_k>, with <phi_i|phi_j> reproduced exactly.
///
/// The Fock space of an embedded state has spatial_mode_count * rank()
/// modes; mode_index() gives the layout.
class InternalModeEmbedding {
 public:
  explicit InternalModeEmbedding(ComplexMatrix coefficients);

  std::size_t photon_count() const {
    return static_cast<std::size_t>(coefficients_.rows());
  }
  std::size_t rank() const { return static_cast<std::size_t>(coefficients_.cols()); }
  const ComplexMatrix& coefficients() const { return coefficients_; }

  std::size_t mode_index(std::size_t spatial, std::size_t internal) const {
    return spatial * rank() + internal;
  }

  /// prod_i A_i^dag |0> with A_i^dag = sum_k c_ik a^dag(spatial_modes[i], k).
  /// Unnormalized: with every photon in one spatial mode the squared norm
  /// is the permanent of the Gram matrix.
  FockVector build(std::span<const std::size_t> spatial_modes,
                   std::size_t spatial_mode_count) const;

  /// A spatial-mode network applied identically to every internal mode.
  Network lift(std::span<const Element> network) const;

  /// Marginal over internal modes: spatial occupation -> probability.
  std::map<Occupation, double> spatial_distribution(
      const FockVector& state, std::size_t spatial_mode_count) const;

 private:
  ComplexMatrix coefficients_;
};

/// Orthogonalize by pivoted Cholesky of the Gram matrix. Directions whose
/// residual pivot falls below |tol::kGramEigenFloor| are dropped, so the
/// rank equals the number of linearly independent packets.
InternalModeEmbedding embed_internal_modes(const PacketSet& packets);

/// Photons with given packets enter the network in `spatial_modes`; the
/// probability that internal-mode-blind detectors register `pattern` at the
/// output. Exact for any degree of partial distinguishability. Throws
/// ShellOverflow above six photons.
double coincidence_with_distinguishability(
    const PacketSet& packets, std::span<const std::size_t> spatial_modes,
    std::size_t spatial_mode_count, std::span<const Element> network,
    const OccupationPattern& pattern);

/// Full output distribution over spatial occupations for the same setup.
std::map<Occupation, double> distribution_with_distinguishability(
    const PacketSet& packets, std::span<const std::size_t> spatial_modes,
    std::size_t spatial_mode_count, std::span<const Element> network);

/// NOON-projection fan (see fan_coincidence) for photons in polarization
/// modes H = 0 and V = 1 with partial distinguishability. `network` acts on
/// the two polarization modes before the fan; one detector per photon.
double fan_coincidence_with_distinguishability(
    const PacketSet& packets, std::span<const std::size_t> polarizations,
    std::span<const Element> network);

}  // namespace multiphoton
