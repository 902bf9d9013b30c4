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
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "multiphoton/fock.hpp"

namespace multiphoton {

/// Lossless two-mode coupler with transmissivity T and reflectivity 1 - T.
///
/// Creation operators transform as
///   a1^dag -> sqrt(T) b1^dag + sqrt(R) b2^dag
///   a2^dag -> sqrt(T) b2^dag - sqrt(R) b1^dag
/// where mode 1 is `first()` and mode 2 is `second()`. The minus sign on
/// the reflected part of the second input is fixed network-wide.
class Splitter {
 public:
  /// Throws InvalidParameter for T outside [0, 1] or equal modes.
  Splitter(double transmissivity, std::size_t first, std::size_t second);

  /// Half-wave plate at angle theta followed by a polarizing splitter:
  /// reflectivity sin^2(2 theta).
  static Splitter from_wave_plate(double theta, std::size_t first,
                                  std::size_t second);

  double transmissivity() const { return transmissivity_; }
  double reflectivity() const { return 1.0 - transmissivity_; }
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

  /// The splitter that undoes this one (same T, roles of the modes swapped).
  Splitter inverse() const { return Splitter(transmissivity_, second_, first_); }

 private:
  double transmissivity_;
  std::size_t first_;
  std::size_t second_;
};

/// Phase shifter: a term with n photons in `mode` picks up exp(i n phase).
struct PhaseShift {
  std::size_t mode = 0;
  double phase = 0.0;
};

using Element = std::variant<Splitter, PhaseShift>;
using Network = std::vector<Element>;

FockVector apply_splitter(const FockVector& state, const Splitter& splitter);
FockVector apply_phase(const FockVector& state, const PhaseShift& shift);

/// Elements are applied in order.
FockVector apply_network(const FockVector& state, std::span<const Element> network);

/// Probability that independent classical particles with input counts
/// `inputs` leave the splitter as `outcome`. Zero on photon-number mismatch.
double classical_outcome_probability(const Occupation& inputs,
                                     const Splitter& splitter,
                                     const Occupation& outcome);

/// Outcome distribution of classical particles routed at random through
/// the network, splitter by splitter (phase shifters are ignored). A
/// particle does not interfere with itself here, so on networks with more
/// than one path between an input and an output this is not the
/// distinguishable-photon distribution; that one comes from |U_jk|^2.
std::map<Occupation, double> classical_distribution(
    const Occupation& inputs, std::span<const Element> network);

/// Partial occupation constraint: std::nullopt leaves a mode unconstrained.
class OccupationPattern {
 public:
  explicit OccupationPattern(std::size_t mode_count);
  OccupationPattern(std::size_t mode_count,
                    std::initializer_list<std::pair<std::size_t, int>> fixed);
  static OccupationPattern exactly(const Occupation& occ);

  OccupationPattern& require(std::size_t mode, int count);

  std::size_t mode_count() const { return counts_.size(); }
  const std::vector<std::optional<int>>& counts() const { return counts_; }
  bool matches(const Occupation& occ) const;
  bool matches(std::span<const int> counts) const;

 private:
  std::vector<std::optional<int>> counts_;
};

/// Result of projecting onto a constrained subspace.
struct Projection {
  FockVector state;   ///< unnormalized projected state
  double probability; ///< its squared norm

  /// Projected state rescaled to unit norm. Throws UnnormalizedState when
  /// the projection is empty.
  FockVector renormalized() const { return state.normalized(); }
};

/// Project onto the occupations matching `pattern`. An empty projection is
/// not an error: it comes back as an empty state with probability zero.
Projection postselect(const FockVector& state, const OccupationPattern& pattern);

/// (|N,0> + exp(i phase)|0,N>)/sqrt(2). Throws InvalidParameter for N < 1.
FockVector make_noon(int photons, double relative_phase = 0.0);

struct MergeResult {
  FockVector projected;  ///< two-mode (H, V) state in output port 1, unnormalized
  double probability;    ///< squared norm of `projected`
};

/// N single photons with polarizations (|H> - exp(i 2 pi (n-1)/N)|V>)/sqrt(2)
/// are merged into one port by N-1 polarization-independent splitters with
/// T = k/(k+1); the result is projected onto all photons in output port 1.
/// Valid for 1 <= N <= 6.
MergeResult hofmann_merge(int photons);

/// Closed-form N-detector coincidence of the NOON-projection fan for the
/// input sum_n c_n |N-n>_H |n>_V: |c_0 - c_N|^2 / (2^(N-1) N^(2N)).
double noon_projection_rate(std::span<const Complex> coefficients, int photons);

/// N-fold coincidence of a fan of N detectors, detector n seeing
///   b_n = (a_H - exp(i 2 pi (n-1)/N) a_V) / (N sqrt 2),
/// computed by applying the detector annihilation operators to `state`.
/// `hv_modes` lists one (H, V) mode pair per internal (temporal) mode;
/// detectors do not resolve internal modes, so all internal assignments are
/// summed. For a single pair this is |<0| b_1 ... b_N |state>|^2.
double fan_coincidence(const FockVector& state,
                       std::span<const std::pair<std::size_t, std::size_t>> hv_modes,
                       int detectors);

}  // namespace multiphoton
