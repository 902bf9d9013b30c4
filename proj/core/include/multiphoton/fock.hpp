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

#include <compare>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "multiphoton/tolerances.hpp"

namespace multiphoton {

using Complex = std::complex<double>;

/// Photon counts per mode, e.g. |2,1> is Occupation{2, 1}.
class Occupation {
 public:
  Occupation() = default;
  explicit Occupation(std::vector<int> counts);
  Occupation(std::initializer_list<int> counts);

  std::size_t mode_count() const { return counts_.size(); }
  int operator[](std::size_t mode) const { return counts_.at(mode); }
  std::span<const int> counts() const { return counts_; }
  int total() const;

  /// Copy with one mode's count replaced.
  Occupation with(std::size_t mode, int count) const;

  /// Concatenation: modes of `this` followed by modes of `other`.
  Occupation concat(const Occupation& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Occupation&, const Occupation&) = default;
  friend bool operator==(const Occupation&, const Occupation&) = default;

 private:
  std::vector<int> counts_;
};

using Terms = std::map<Occupation, Complex>;

/// Sparse superposition of multimode Fock basis states.
///
/// Values are immutable: every operation returns a new vector. Terms with
/// |amplitude| < prune_threshold never appear. The `normalized` flag is
/// explicit; states produced by projection or creation operators carry it
/// cleared and must go through normalized() before outcome_probability().
class FockVector {
 public:
  /// Throws ModeMismatch if a term has the wrong mode count and
  /// UnnormalizedState if `normalized` is requested for a state whose norm
  /// deviates from one by more than tol::kNormalization.
  FockVector(std::size_t mode_count, Terms terms, bool normalized = false,
             double prune_threshold = tol::kPrune);

  static FockVector vacuum(std::size_t mode_count,
                           double prune_threshold = tol::kPrune);

  std::size_t mode_count() const { return mode_count_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool is_normalized() const { return normalized_; }
  double prune_threshold() const { return prune_threshold_; }

  Complex amplitude(const Occupation& occ) const;
  double norm_squared() const;

  /// Rescaled to unit norm and flagged. Throws UnnormalizedState on a zero
  /// vector.
  FockVector normalized() const;

  /// Multiply every amplitude. Clears the flag unless |factor| == 1.
  FockVector scaled(Complex factor) const;

  /// Same terms with a different prune threshold (re-pruned).
  FockVector with_prune_threshold(double threshold) const;

  friend FockVector operator+(const FockVector& a, const FockVector& b);

 private:
  struct Unchecked {};
  FockVector(Unchecked, std::size_t mode_count, Terms terms, bool normalized,
             double prune_threshold);
  friend class FockBuilder;

  std::size_t mode_count_ = 0;
  Terms terms_;
  bool normalized_ = false;
  double prune_threshold_ = tol::kPrune;
};

FockVector operator*(Complex factor, const FockVector& state);

/// Accumulates amplitudes term by term and emits a pruned FockVector.
/// Internal operations use it so the normalized flag can be carried over
/// from a unitary input without a redundant public-constructor check.
class FockBuilder {
 public:
  FockBuilder(std::size_t mode_count, double prune_threshold);

  void add(const Occupation& occ, Complex amplitude);
  void add(Occupation&& occ, Complex amplitude);

  /// Keep the flag only when the result still has unit norm.
  FockVector finish(bool inherit_normalized) &&;

 private:
  std::size_t mode_count_;
  double prune_threshold_;
  Terms terms_;
};

/// Single normalized basis ket |occ>. Throws InvalidOccupation for zero modes.
FockVector make_basis_state(const Occupation& occ);

/// a^dagger on `mode`: |..n..> -> sqrt(n+1)|..n+1..>. Result is unnormalized.
FockVector apply_creation(const FockVector& state, std::size_t mode);

/// a on `mode`: |..n..> -> sqrt(n)|..n-1..>. Result is unnormalized.
FockVector apply_annihilation(const FockVector& state, std::size_t mode);

/// <a|b>, conjugate-linear in `a`.
Complex inner_product(const FockVector& a, const FockVector& b);

/// |<occ|state>|^2 for a state flagged normalized.
double outcome_probability(const FockVector& state, const Occupation& occ);

/// Tensor product; modes of `a` come first.
FockVector tensor(const FockVector& a, const FockVector& b);

/// <state| n_mode |state> computed directly from the amplitudes.
double mean_photon_number(const FockVector& state, std::size_t mode);

/// All occupations of `mode_count` modes with exactly `photons` photons, in
/// ascending lexicographic order.
std::vector<Occupation> photon_shell(std::size_t mode_count, int photons);

}  // namespace multiphoton
