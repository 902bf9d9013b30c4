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

#include "multiphoton/packets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "multiphoton/errors.hpp"
#include "multiphoton/tolerances.hpp"

namespace multiphoton {

namespace {

void check_bandwidth(const GaussianPacket& p) {
  if (!(p.bandwidth > 0.0)) {
    throw InvalidParameter("packet bandwidth must be positive, got " +
                           std::to_string(p.bandwidth));
  }
}

void validate_gram(const ComplexMatrix& gram) {
  if (gram.rows() != gram.cols()) throw InvalidParameter("Gram matrix must be square");
  const Eigen::Index n = gram.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(gram(i, i) - 1.0) > tol::kExact) {
      throw InvalidParameter("Gram matrix must have unit diagonal");
    }
    for (Eigen::Index j = 0; j < i; ++j) {
      if (std::abs(gram(i, j) - std::conj(gram(j, i))) > tol::kExact) {
        throw InvalidParameter("Gram matrix must be Hermitian");
      }
    }
  }
  if (n == 0) return;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
  const double lowest = solver.eigenvalues().minCoeff();
  if (lowest < tol::kGramEigenFloor) {
    throw IndefiniteGram("Gram matrix has eigenvalue " + std::to_string(lowest));
  }
}

}  // namespace

Complex GaussianPacket::amplitude(double omega) const {
  check_bandwidth(*this);
  const double x = omega - center_frequency;
  const double norm = std::pow(2.0 * std::numbers::pi * bandwidth * bandwidth, -0.25);
  return std::polar(norm * std::exp(-x * x / (4.0 * bandwidth * bandwidth)),
                    omega * delay);
}

Complex packet_overlap(const GaussianPacket& a, const GaussianPacket& b) {
  check_bandwidth(a);
  check_bandwidth(b);
  // Integrate in x = w - w_a so large center frequencies do not cancel.
  const double va = a.bandwidth * a.bandwidth;
  const double vb = b.bandwidth * b.bandwidth;
  const double d = b.center_frequency - a.center_frequency;
  const double dtau = b.delay - a.delay;
  const double quad = 1.0 / (4.0 * va) + 1.0 / (4.0 * vb);
  const Complex lin{d / (2.0 * vb), dtau};
  const Complex constant{-d * d / (4.0 * vb), dtau * a.center_frequency};
  const double prefactor = std::pow(4.0 * std::numbers::pi * std::numbers::pi * va * vb, -0.25) *
                           std::sqrt(std::numbers::pi / quad);
  return prefactor * std::exp(lin * lin / (4.0 * quad) + constant);
}

PacketSet::PacketSet(std::vector<GaussianPacket> packets)
    : packets_(std::move(packets)) {
  const auto n = static_cast<Eigen::Index>(packets_.size());
  gram_.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    gram_(i, i) = 1.0;
    check_bandwidth(packets_[i]);
    for (Eigen::Index j = 0; j < i; ++j) {
      gram_(i, j) = packet_overlap(packets_[i], packets_[j]);
      gram_(j, i) = std::conj(gram_(i, j));
    }
  }
}

PacketSet PacketSet::from_gram(ComplexMatrix gram) {
  validate_gram(gram);
  PacketSet set;
  set.gram_ = std::move(gram);
  return set;
}

PacketSet PacketSet::subset(std::span<const std::size_t> photons) const {
  PacketSet out;
  for (auto p : photons) {
    if (p >= size()) throw InvalidParameter("subset: photon index out of range");
  }
  const auto n = static_cast<Eigen::Index>(photons.size());
  out.gram_.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out.gram_(i, j) = gram_(static_cast<Eigen::Index>(photons[i]),
                              static_cast<Eigen::Index>(photons[j]));
    }
  }
  if (!packets_.empty()) {
    for (auto p : photons) out.packets_.push_back(packets_.at(p));
  }
  return out;
}

DistinguishabilityScenario::DistinguishabilityScenario(
    std::size_t photon_count, std::vector<std::vector<std::size_t>> blocks)
    : photon_count_(photon_count), blocks_(std::move(blocks)) {
  std::vector<int> seen(photon_count, 0);
  for (const auto& block : blocks_) {
    if (block.empty()) throw InvalidParameter("empty distinguishability block");
    for (auto p : block) {
      if (p >= photon_count) throw InvalidParameter("photon index out of range");
      if (seen[p]++) throw InvalidParameter("photon appears in two blocks");
    }
  }
  if (std::ranges::any_of(seen, [](int s) { return s == 0; })) {
    throw InvalidParameter("blocks must cover every photon");
  }
}

DistinguishabilityScenario DistinguishabilityScenario::all_identical(
    std::size_t photon_count) {
  std::vector<std::size_t> all(photon_count);
  for (std::size_t i = 0; i < photon_count; ++i) all[i] = i;
  return DistinguishabilityScenario(photon_count, {all});
}

DistinguishabilityScenario DistinguishabilityScenario::all_distinguishable(
    std::size_t photon_count) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < photon_count; ++i) blocks.push_back({i});
  return DistinguishabilityScenario(photon_count, std::move(blocks));
}

PacketSet DistinguishabilityScenario::packet_set() const {
  std::vector<std::size_t> block_of(photon_count_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (auto p : blocks_[b]) block_of[p] = b;
  }
  const auto n = static_cast<Eigen::Index>(photon_count_);
  ComplexMatrix gram = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (block_of[i] == block_of[j]) gram(i, j) = 1.0;
    }
  }
  return PacketSet::from_gram(std::move(gram));
}

}  // namespace multiphoton
