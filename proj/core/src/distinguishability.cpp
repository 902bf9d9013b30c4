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

#include "multiphoton/distinguishability.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "multiphoton/errors.hpp"
#include "multiphoton/tolerances.hpp"

namespace multiphoton {

namespace {

constexpr std::size_t kMaxCoincidencePhotons = 6;

void check_photons(const PacketSet& packets, std::span<const std::size_t> modes,
                   std::size_t spatial_mode_count) {
  if (packets.size() != modes.size()) {
    throw InvalidParameter("one spatial mode is needed per photon");
  }
  if (packets.size() > kMaxCoincidencePhotons) {
    throw ShellOverflow("exact distinguishability engine supports at most " +
                        std::to_string(kMaxCoincidencePhotons) + " photons");
  }
  for (auto m : modes) {
    if (m >= spatial_mode_count) throw ModeMismatch("photon spatial mode out of range");
  }
}

// Pivoted Cholesky S = L L^dag on the original index order; stops once the
// largest remaining pivot is numerically zero.
ComplexMatrix pivoted_cholesky(const ComplexMatrix& s) {
  const Eigen::Index n = s.rows();
  ComplexMatrix l = ComplexMatrix::Zero(n, n);
  std::vector<double> residual(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Eigen::Index i = 0; i < n; ++i) residual[i] = s(i, i).real();

  Eigen::Index rank = 0;
  for (; rank < n; ++rank) {
    Eigen::Index pivot = -1;
    double best = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!used[i] && residual[i] > best) {
        best = residual[i];
        pivot = i;
      }
    }
    if (pivot < 0 || best <= -tol::kGramEigenFloor) break;
    used[pivot] = true;
    const double diag = std::sqrt(best);
    l(pivot, rank) = diag;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (used[i]) continue;
      Complex v = s(i, pivot);
      for (Eigen::Index k = 0; k < rank; ++k) v -= l(i, k) * std::conj(l(pivot, k));
      l(i, rank) = v / diag;
      residual[i] -= std::norm(l(i, rank));
    }
  }
  return l.leftCols(rank);
}

}  // namespace

InternalModeEmbedding::InternalModeEmbedding(ComplexMatrix coefficients)
    : coefficients_(std::move(coefficients)) {}

FockVector InternalModeEmbedding::build(std::span<const std::size_t> spatial_modes,
                                        std::size_t spatial_mode_count) const {
  if (spatial_modes.size() != photon_count()) {
    throw InvalidParameter("one spatial mode is needed per photon");
  }
  if (photon_count() > static_cast<std::size_t>(tol::kMaxShell)) {
    throw ShellOverflow("embedding exceeds the photon shell limit");
  }
  const std::size_t modes = spatial_mode_count * rank();
  FockVector state = FockVector::vacuum(modes == 0 ? 1 : modes);
  for (std::size_t i = 0; i < photon_count(); ++i) {
    if (spatial_modes[i] >= spatial_mode_count) {
      throw ModeMismatch("photon spatial mode out of range");
    }
    FockVector next(state.mode_count(), {});
    for (std::size_t k = 0; k < rank(); ++k) {
      const Complex c = coefficients_(static_cast<Eigen::Index>(i),
                                      static_cast<Eigen::Index>(k));
      if (c == Complex{}) continue;
      next = next + c * apply_creation(state, mode_index(spatial_modes[i], k));
    }
    state = std::move(next);
  }
  return state;
}

Network InternalModeEmbedding::lift(std::span<const Element> network) const {
  Network lifted;
  for (const auto& element : network) {
    for (std::size_t k = 0; k < rank(); ++k) {
      if (const auto* s = std::get_if<Splitter>(&element)) {
        lifted.emplace_back(Splitter(s->transmissivity(), mode_index(s->first(), k),
                                     mode_index(s->second(), k)));
      } else {
        const auto& p = std::get<PhaseShift>(element);
        lifted.emplace_back(PhaseShift{mode_index(p.mode, k), p.phase});
      }
    }
  }
  return lifted;
}

std::map<Occupation, double> InternalModeEmbedding::spatial_distribution(
    const FockVector& state, std::size_t spatial_mode_count) const {
  std::map<Occupation, double> dist;
  std::vector<int> spatial(spatial_mode_count);
  for (const auto& [occ, amp] : state.terms()) {
    for (std::size_t s = 0; s < spatial_mode_count; ++s) {
      int n = 0;
      for (std::size_t k = 0; k < rank(); ++k) n += occ[mode_index(s, k)];
      spatial[s] = n;
    }
    dist[Occupation(spatial)] += std::norm(amp);
  }
  return dist;
}

InternalModeEmbedding embed_internal_modes(const PacketSet& packets) {
  // Revalidates sets assembled from raw packets, whose Gram matrix is
  // PSD analytically but may carry rounding.
  const ComplexMatrix& gram = packets.gram();
  if (gram.rows() > 0) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < tol::kGramEigenFloor) {
      throw IndefiniteGram("Gram matrix is not positive semidefinite");
    }
  }
  // <phi_i|phi_j> = sum_k conj(c_ik) c_jk, while Cholesky gives
  // S_ij = sum_k L_ik conj(L_jk); hence c = conj(L).
  return InternalModeEmbedding(pivoted_cholesky(gram).conjugate());
}

std::map<Occupation, double> distribution_with_distinguishability(
    const PacketSet& packets, std::span<const std::size_t> spatial_modes,
    std::size_t spatial_mode_count, std::span<const Element> network) {
  check_photons(packets, spatial_modes, spatial_mode_count);
  const InternalModeEmbedding embedding = embed_internal_modes(packets);
  const FockVector input = embedding.build(spatial_modes, spatial_mode_count).normalized();
  const Network lifted = embedding.lift(network);
  const FockVector output = apply_network(input, lifted);
  return embedding.spatial_distribution(output, spatial_mode_count);
}

double coincidence_with_distinguishability(
    const PacketSet& packets, std::span<const std::size_t> spatial_modes,
    std::size_t spatial_mode_count, std::span<const Element> network,
    const OccupationPattern& pattern) {
  if (pattern.mode_count() != spatial_mode_count) {
    throw ModeMismatch("pattern must constrain the spatial modes");
  }
  double p = 0.0;
  for (const auto& [occ, prob] : distribution_with_distinguishability(
           packets, spatial_modes, spatial_mode_count, network)) {
    if (pattern.matches(occ)) p += prob;
  }
  return p;
}

double fan_coincidence_with_distinguishability(
    const PacketSet& packets, std::span<const std::size_t> polarizations,
    std::span<const Element> network) {
  check_photons(packets, polarizations, 2);
  const InternalModeEmbedding embedding = embed_internal_modes(packets);
  FockVector state = embedding.build(polarizations, 2).normalized();
  state = apply_network(state, embedding.lift(network));
  std::vector<std::pair<std::size_t, std::size_t>> hv;
  for (std::size_t k = 0; k < embedding.rank(); ++k) {
    hv.emplace_back(embedding.mode_index(0, k), embedding.mode_index(1, k));
  }
  return fan_coincidence(state, hv, static_cast<int>(packets.size()));
}

}  // namespace multiphoton
