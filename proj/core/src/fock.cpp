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

#include "multiphoton/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "multiphoton/errors.hpp"

namespace multiphoton {

namespace {

void check_counts(std::span<const int> counts) {
  for (int n : counts) {
    if (n < 0) {
      throw InvalidOccupation("occupation entries must be non-negative");
    }
  }
}

bool unit_norm(const Terms& terms) {
  double sum = 0.0;
  for (const auto& [occ, amp] : terms) sum += std::norm(amp);
  return std::abs(sum - 1.0) <= tol::kNormalization;
}

void check_mode(const FockVector& state, std::size_t mode) {
  if (mode >= state.mode_count()) {
    throw ModeMismatch("mode index " + std::to_string(mode) +
                       " out of range for " +
                       std::to_string(state.mode_count()) + " modes");
  }
}

}  // namespace

Occupation::Occupation(std::vector<int> counts) : counts_(std::move(counts)) {
  check_counts(counts_);
}

Occupation::Occupation(std::initializer_list<int> counts) : counts_(counts) {
  check_counts(counts_);
}

int Occupation::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

Occupation Occupation::with(std::size_t mode, int count) const {
  if (count < 0) throw InvalidOccupation("occupation entries must be non-negative");
  Occupation out = *this;
  out.counts_.at(mode) = count;
  return out;
}

Occupation Occupation::concat(const Occupation& other) const {
  Occupation out = *this;
  out.counts_.insert(out.counts_.end(), other.counts_.begin(),
                     other.counts_.end());
  return out;
}

std::string Occupation::to_string() const {
  std::ostringstream os;
  os << '|';
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) os << ',';
    os << counts_[i];
  }
  os << '>';
  return os.str();
}

FockVector::FockVector(std::size_t mode_count, Terms terms, bool normalized,
                       double prune_threshold)
    : mode_count_(mode_count),
      normalized_(normalized),
      prune_threshold_(prune_threshold) {
  if (prune_threshold < 0.0) {
    throw InvalidParameter("prune threshold must be non-negative");
  }
  for (auto& [occ, amp] : terms) {
    if (occ.mode_count() != mode_count) {
      throw ModeMismatch("term " + occ.to_string() + " does not have " +
                         std::to_string(mode_count) + " modes");
    }
    if (std::abs(amp) >= prune_threshold_) terms_.emplace(occ, amp);
  }
  if (normalized_ && !unit_norm(terms_)) {
    throw UnnormalizedState("state flagged normalized has norm^2 " +
                            std::to_string(norm_squared()));
  }
}

FockVector::FockVector(Unchecked, std::size_t mode_count, Terms terms,
                       bool normalized, double prune_threshold)
    : mode_count_(mode_count),
      terms_(std::move(terms)),
      normalized_(normalized),
      prune_threshold_(prune_threshold) {}

FockVector FockVector::vacuum(std::size_t mode_count, double prune_threshold) {
  Terms terms;
  terms.emplace(Occupation(std::vector<int>(mode_count, 0)), Complex{1.0, 0.0});
  return FockVector(mode_count, std::move(terms), true, prune_threshold);
}

Complex FockVector::amplitude(const Occupation& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? Complex{} : it->second;
}

double FockVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& [occ, amp] : terms_) sum += std::norm(amp);
  return sum;
}

FockVector FockVector::normalized() const {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) throw UnnormalizedState("cannot normalize a zero vector");
  FockBuilder builder(mode_count_, prune_threshold_);
  const double scale = 1.0 / std::sqrt(n2);
  for (const auto& [occ, amp] : terms_) builder.add(occ, amp * scale);
  FockVector out = std::move(builder).finish(false);
  out.normalized_ = unit_norm(out.terms_);
  return out;
}

FockVector FockVector::scaled(Complex factor) const {
  FockBuilder builder(mode_count_, prune_threshold_);
  for (const auto& [occ, amp] : terms_) builder.add(occ, amp * factor);
  return std::move(builder).finish(normalized_ &&
                                   std::abs(std::abs(factor) - 1.0) < 1e-15);
}

FockVector FockVector::with_prune_threshold(double threshold) const {
  return FockVector(mode_count_, terms_, false, threshold);
}

FockVector operator+(const FockVector& a, const FockVector& b) {
  if (a.mode_count() != b.mode_count()) {
    throw ModeMismatch("cannot add states with different mode counts");
  }
  FockBuilder builder(a.mode_count(), std::max(a.prune_threshold(),
                                               b.prune_threshold()));
  for (const auto& [occ, amp] : a.terms()) builder.add(occ, amp);
  for (const auto& [occ, amp] : b.terms()) builder.add(occ, amp);
  return std::move(builder).finish(false);
}

FockVector operator*(Complex factor, const FockVector& state) {
  return state.scaled(factor);
}

FockBuilder::FockBuilder(std::size_t mode_count, double prune_threshold)
    : mode_count_(mode_count), prune_threshold_(prune_threshold) {}

void FockBuilder::add(const Occupation& occ, Complex amplitude) {
  terms_[occ] += amplitude;
}

void FockBuilder::add(Occupation&& occ, Complex amplitude) {
  auto [it, inserted] = terms_.try_emplace(std::move(occ), amplitude);
  if (!inserted) it->second += amplitude;
}

FockVector FockBuilder::finish(bool inherit_normalized) && {
  std::erase_if(terms_, [this](const auto& kv) {
    return std::abs(kv.second) < prune_threshold_;
  });
  const bool flag = inherit_normalized && unit_norm(terms_);
  return FockVector(FockVector::Unchecked{}, mode_count_, std::move(terms_),
                    flag, prune_threshold_);
}

FockVector make_basis_state(const Occupation& occ) {
  if (occ.mode_count() == 0) {
    throw InvalidOccupation("a basis state needs at least one mode");
  }
  Terms terms;
  terms.emplace(occ, Complex{1.0, 0.0});
  return FockVector(occ.mode_count(), std::move(terms), true);
}

FockVector apply_creation(const FockVector& state, std::size_t mode) {
  check_mode(state, mode);
  FockBuilder builder(state.mode_count(), state.prune_threshold());
  for (const auto& [occ, amp] : state.terms()) {
    const int n = occ[mode];
    builder.add(occ.with(mode, n + 1), amp * std::sqrt(static_cast<double>(n + 1)));
  }
  return std::move(builder).finish(false);
}

FockVector apply_annihilation(const FockVector& state, std::size_t mode) {
  check_mode(state, mode);
  FockBuilder builder(state.mode_count(), state.prune_threshold());
  for (const auto& [occ, amp] : state.terms()) {
    const int n = occ[mode];
    if (n == 0) continue;
    builder.add(occ.with(mode, n - 1), amp * std::sqrt(static_cast<double>(n)));
  }
  return std::move(builder).finish(false);
}

Complex inner_product(const FockVector& a, const FockVector& b) {
  if (a.mode_count() != b.mode_count()) {
    throw ModeMismatch("inner product of states with different mode counts");
  }
  const FockVector& small = a.size() <= b.size() ? a : b;
  const FockVector& large = a.size() <= b.size() ? b : a;
  Complex sum{};
  for (const auto& [occ, amp] : small.terms()) {
    auto it = large.terms().find(occ);
    if (it == large.terms().end()) continue;
    sum += (&small == &a) ? std::conj(amp) * it->second
                          : std::conj(it->second) * amp;
  }
  return sum;
}

double outcome_probability(const FockVector& state, const Occupation& occ) {
  if (!state.is_normalized()) {
    throw UnnormalizedState(
        "outcome probabilities need a normalized state; call normalized()");
  }
  if (occ.mode_count() != state.mode_count()) {
    throw ModeMismatch("outcome " + occ.to_string() +
                       " does not match the state's mode count");
  }
  return std::norm(state.amplitude(occ));
}

FockVector tensor(const FockVector& a, const FockVector& b) {
  FockBuilder builder(a.mode_count() + b.mode_count(),
                      std::max(a.prune_threshold(), b.prune_threshold()));
  for (const auto& [occ_a, amp_a] : a.terms()) {
    for (const auto& [occ_b, amp_b] : b.terms()) {
      builder.add(occ_a.concat(occ_b), amp_a * amp_b);
    }
  }
  return std::move(builder).finish(a.is_normalized() && b.is_normalized());
}

double mean_photon_number(const FockVector& state, std::size_t mode) {
  check_mode(state, mode);
  double sum = 0.0;
  for (const auto& [occ, amp] : state.terms()) sum += occ[mode] * std::norm(amp);
  return sum;
}

std::vector<Occupation> photon_shell(std::size_t mode_count, int photons) {
  if (mode_count == 0) throw InvalidOccupation("shell needs at least one mode");
  if (photons < 0) throw InvalidOccupation("photon number must be non-negative");
  std::vector<Occupation> shell;
  std::vector<int> counts(mode_count, 0);
  // Depth-first fill; the leading mode takes the fewest photons first so the
  // output is lexicographically ascending.
  auto fill = [&](auto&& self, std::size_t mode, int remaining) -> void {
    if (mode + 1 == mode_count) {
      counts[mode] = remaining;
      shell.emplace_back(counts);
      return;
    }
    for (int n = 0; n <= remaining; ++n) {
      counts[mode] = n;
      self(self, mode + 1, remaining - n);
    }
  };
  fill(fill, 0, photons);
  return shell;
}

}  // namespace multiphoton
