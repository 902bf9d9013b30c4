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
#include <vector>

#include <Eigen/Dense>

#include "multiphoton/fock.hpp"

namespace multiphoton {

using ComplexMatrix = Eigen::MatrixXcd;

/// Single-photon spectral amplitude
///   phi(w) = (2 pi sigma^2)^(-1/4) exp(-(w - w0)^2 / (4 sigma^2)) exp(i w tau),
/// unit-normalized over the real line.
struct GaussianPacket {
  double center_frequency = 0.0;
  double bandwidth = 1.0;
  double delay = 0.0;

  Complex amplitude(double omega) const;
};

/// <a|b> in closed form. Throws InvalidParameter for non-positive bandwidth.
Complex packet_overlap(const GaussianPacket& a, const GaussianPacket& b);

/// Ordered photon wave packets with their Gram matrix S_ij = <phi_i|phi_j>.
class PacketSet {
 public:
  explicit PacketSet(std::vector<GaussianPacket> packets);

  /// A set described only by its Gram matrix. Must be Hermitian with unit
  /// diagonal and positive semidefinite to within tol::kGramEigenFloor;
  /// throws IndefiniteGram otherwise.
  static PacketSet from_gram(ComplexMatrix gram);

  std::size_t size() const { return static_cast<std::size_t>(gram_.rows()); }
  const ComplexMatrix& gram() const { return gram_; }

  /// Empty when the set was built from a Gram matrix.
  const std::vector<GaussianPacket>& packets() const { return packets_; }

  /// Sub-set restricted to the given photon indices (in that order).
  PacketSet subset(std::span<const std::size_t> photons) const;

 private:
  PacketSet() = default;
  std::vector<GaussianPacket> packets_;
  ComplexMatrix gram_;
};

/// Partition of photons into blocks: photons in a block share one wave
/// packet, distinct blocks are exactly orthogonal.
class DistinguishabilityScenario {
 public:
  /// Throws InvalidParameter unless the blocks are disjoint and cover
  /// 0..photon_count-1.
  DistinguishabilityScenario(std::size_t photon_count,
                             std::vector<std::vector<std::size_t>> blocks);

  static DistinguishabilityScenario all_identical(std::size_t photon_count);
  static DistinguishabilityScenario all_distinguishable(std::size_t photon_count);

  std::size_t photon_count() const { return photon_count_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

  PacketSet packet_set() const;

 private:
  std::size_t photon_count_;
  std::vector<std::vector<std::size_t>> blocks_;
};

}  // namespace multiphoton
