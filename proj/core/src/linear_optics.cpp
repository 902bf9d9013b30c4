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

#include "multiphoton/linear_optics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "multiphoton/errors.hpp"

namespace multiphoton {

namespace {

constexpr int kFactorialTable = 64;

// sqrt(n!) for the re-expansion of creation-operator monomials.
const std::array<double, kFactorialTable>& sqrt_factorials() {
  static const auto table = [] {
    std::array<double, kFactorialTable> t{};
    double f = 1.0;
    t[0] = 1.0;
    for (int n = 1; n < kFactorialTable; ++n) {
      f *= n;
      t[n] = std::sqrt(f);
    }
    return t;
  }();
  return table;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<double> powers(double base, int max_exp) {
  std::vector<double> p(static_cast<std::size_t>(max_exp) + 1, 1.0);
  for (int i = 1; i <= max_exp; ++i) p[i] = p[i - 1] * base;
  return p;
}

void check_pair(std::size_t mode_count, const Splitter& s) {
  if (s.first() >= mode_count || s.second() >= mode_count) {
    throw ModeMismatch("splitter modes (" + std::to_string(s.first()) + ", " +
                       std::to_string(s.second()) + ") out of range for " +
                       std::to_string(mode_count) + " modes");
  }
}

}  // namespace

Splitter::Splitter(double transmissivity, std::size_t first, std::size_t second)
    : transmissivity_(transmissivity), first_(first), second_(second) {
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw InvalidParameter("transmissivity must lie in [0, 1], got " +
                           std::to_string(transmissivity));
  }
  if (first == second) {
    throw InvalidParameter("splitter needs two distinct modes");
  }
}

Splitter Splitter::from_wave_plate(double theta, std::size_t first,
                                   std::size_t second) {
  const double s = std::sin(2.0 * theta);
  return Splitter(1.0 - s * s, first, second);
}

FockVector apply_splitter(const FockVector& state, const Splitter& splitter) {
  check_pair(state.mode_count(), splitter);
  const std::size_t m1 = splitter.first();
  const std::size_t m2 = splitter.second();
  const double st = std::sqrt(splitter.transmissivity());
  const double sr = std::sqrt(splitter.reflectivity());
  const auto& sqrt_fact = sqrt_factorials();

  FockBuilder builder(state.mode_count(), state.prune_threshold());
  std::vector<int> counts;
  for (const auto& [occ, amp] : state.terms()) {
    const int n1 = occ[m1];
    const int n2 = occ[m2];
    if (n1 + n2 >= kFactorialTable) {
      throw ShellOverflow("too many photons on one splitter");
    }
    if (n1 + n2 == 0) {
      builder.add(occ, amp);
      continue;
    }
    const auto pt = powers(st, n1 + n2);
    const auto pr = powers(sr, n1 + n2);
    const Complex prefactor = amp / (sqrt_fact[n1] * sqrt_fact[n2]);
    counts.assign(occ.counts().begin(), occ.counts().end());
    // (sqrt(T) b1 + sqrt(R) b2)^n1: k photons of input 1 transmitted.
    // (sqrt(T) b2 - sqrt(R) b1)^n2: l photons of input 2 transmitted.
    for (int k = 0; k <= n1; ++k) {
      const double c1 = binomial(n1, k) * pt[k] * pr[n1 - k];
      for (int l = 0; l <= n2; ++l) {
        const int reflected2 = n2 - l;
        double c2 = binomial(n2, l) * pt[l] * pr[reflected2];
        if (reflected2 % 2 == 1) c2 = -c2;
        const int out1 = k + reflected2;
        const int out2 = (n1 - k) + l;
        counts[m1] = out1;
        counts[m2] = out2;
        builder.add(Occupation(counts),
                    prefactor * (c1 * c2 * sqrt_fact[out1] * sqrt_fact[out2]));
      }
    }
  }
  return std::move(builder).finish(state.is_normalized());
}

FockVector apply_phase(const FockVector& state, const PhaseShift& shift) {
  if (shift.mode >= state.mode_count()) {
    throw ModeMismatch("phase shifter mode out of range");
  }
  FockBuilder builder(state.mode_count(), state.prune_threshold());
  for (const auto& [occ, amp] : state.terms()) {
    builder.add(occ, amp * std::polar(1.0, occ[shift.mode] * shift.phase));
  }
  return std::move(builder).finish(state.is_normalized());
}

FockVector apply_network(const FockVector& state,
                         std::span<const Element> network) {
  FockVector current = state;
  for (const auto& element : network) {
    current = std::visit(
        [&](const auto& e) -> FockVector {
          if constexpr (std::is_same_v<std::decay_t<decltype(e)>, Splitter>) {
            return apply_splitter(current, e);
          } else {
            return apply_phase(current, e);
          }
        },
        element);
  }
  return current;
}

namespace {

std::map<Occupation, double> route_classically(
    const std::map<Occupation, double>& in, const Splitter& s) {
  const double t = s.transmissivity();
  const double r = s.reflectivity();
  std::map<Occupation, double> out;
  std::vector<int> counts;
  for (const auto& [occ, p] : in) {
    check_pair(occ.mode_count(), s);
    const int n1 = occ[s.first()];
    const int n2 = occ[s.second()];
    counts.assign(occ.counts().begin(), occ.counts().end());
    for (int k = 0; k <= n1; ++k) {
      const double p1 = binomial(n1, k) * std::pow(t, k) * std::pow(r, n1 - k);
      for (int l = 0; l <= n2; ++l) {
        const double p2 = binomial(n2, l) * std::pow(t, l) * std::pow(r, n2 - l);
        const double w = p * p1 * p2;
        if (w == 0.0) continue;
        counts[s.first()] = k + (n2 - l);
        counts[s.second()] = (n1 - k) + l;
        out[Occupation(counts)] += w;
      }
    }
  }
  return out;
}

}  // namespace

double classical_outcome_probability(const Occupation& inputs,
                                     const Splitter& splitter,
                                     const Occupation& outcome) {
  if (inputs.mode_count() != outcome.mode_count()) {
    throw ModeMismatch("inputs and outcome have different mode counts");
  }
  if (inputs.total() != outcome.total()) return 0.0;
  const auto dist = route_classically({{inputs, 1.0}}, splitter);
  auto it = dist.find(outcome);
  return it == dist.end() ? 0.0 : it->second;
}

std::map<Occupation, double> classical_distribution(
    const Occupation& inputs, std::span<const Element> network) {
  std::map<Occupation, double> dist{{inputs, 1.0}};
  for (const auto& element : network) {
    if (const auto* s = std::get_if<Splitter>(&element)) {
      dist = route_classically(dist, *s);
    }
  }
  return dist;
}

OccupationPattern::OccupationPattern(std::size_t mode_count)
    : counts_(mode_count) {}

OccupationPattern::OccupationPattern(
    std::size_t mode_count,
    std::initializer_list<std::pair<std::size_t, int>> fixed)
    : counts_(mode_count) {
  for (const auto& [mode, count] : fixed) require(mode, count);
}

OccupationPattern OccupationPattern::exactly(const Occupation& occ) {
  OccupationPattern p(occ.mode_count());
  for (std::size_t i = 0; i < occ.mode_count(); ++i) p.counts_[i] = occ[i];
  return p;
}

OccupationPattern& OccupationPattern::require(std::size_t mode, int count) {
  if (mode >= counts_.size()) throw ModeMismatch("pattern mode out of range");
  if (count < 0) throw InvalidOccupation("pattern counts must be non-negative");
  counts_[mode] = count;
  return *this;
}

bool OccupationPattern::matches(std::span<const int> counts) const {
  if (counts.size() != counts_.size()) return false;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts_[i] && *counts_[i] != counts[i]) return false;
  }
  return true;
}

bool OccupationPattern::matches(const Occupation& occ) const {
  return matches(occ.counts());
}

Projection postselect(const FockVector& state, const OccupationPattern& pattern) {
  if (pattern.mode_count() != state.mode_count()) {
    throw ModeMismatch("pattern and state have different mode counts");
  }
  Terms kept;
  double prob = 0.0;
  for (const auto& [occ, amp] : state.terms()) {
    if (!pattern.matches(occ)) continue;
    kept.emplace(occ, amp);
    prob += std::norm(amp);
  }
  return {FockVector(state.mode_count(), std::move(kept), false,
                     state.prune_threshold()),
          prob};
}

FockVector make_noon(int photons, double relative_phase) {
  if (photons < 1) throw InvalidParameter("NOON state needs N >= 1");
  const double a = 1.0 / std::numbers::sqrt2;
  Terms terms;
  terms.emplace(Occupation{photons, 0}, Complex{a, 0.0});
  terms.emplace(Occupation{0, photons}, std::polar(a, relative_phase));
  return FockVector(2, std::move(terms), true);
}

MergeResult hofmann_merge(int photons) {
  if (photons < 1 || photons > 6) {
    throw InvalidParameter("merge supports 1 <= N <= 6, got " +
                           std::to_string(photons));
  }
  const auto n_ports = static_cast<std::size_t>(photons);
  const auto h = [](std::size_t port) { return 2 * port; };
  const auto v = [](std::size_t port) { return 2 * port + 1; };

  FockVector state = FockVector::vacuum(2 * n_ports);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (std::size_t port = 0; port < n_ports; ++port) {
    const double twist = 2.0 * std::numbers::pi * static_cast<double>(port) /
                         static_cast<double>(photons);
    state = inv_sqrt2 * apply_creation(state, h(port)) +
            std::polar(-inv_sqrt2, twist) * apply_creation(state, v(port));
  }
  state = state.normalized();

  // Port 0 accumulates; after merging k ports each photon reaches it with
  // amplitude of magnitude 1/sqrt(k+1).
  for (std::size_t k = 1; k < n_ports; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(k + 1);
    state = apply_splitter(state, Splitter(t, h(0), h(k)));
    state = apply_splitter(state, Splitter(t, v(0), v(k)));
  }

  OccupationPattern all_in_port0(state.mode_count());
  for (std::size_t mode = 2; mode < state.mode_count(); ++mode) {
    all_in_port0.require(mode, 0);
  }
  const Projection proj = postselect(state, all_in_port0);

  Terms reduced;
  for (const auto& [occ, amp] : proj.state.terms()) {
    reduced.emplace(Occupation{occ[0], occ[1]}, amp);
  }
  return {FockVector(2, std::move(reduced)), proj.probability};
}

double noon_projection_rate(std::span<const Complex> coefficients, int photons) {
  if (photons < 1) throw InvalidParameter("NOON projection needs N >= 1");
  if (coefficients.size() != static_cast<std::size_t>(photons) + 1) {
    throw InvalidParameter("expected N+1 coefficients c_0..c_N");
  }
  const double n = photons;
  const double denom = std::pow(2.0, n - 1.0) * std::pow(n, 2.0 * n);
  return std::norm(coefficients.front() - coefficients.back()) / denom;
}

double fan_coincidence(const FockVector& state,
                       std::span<const std::pair<std::size_t, std::size_t>> hv_modes,
                       int detectors) {
  if (detectors < 1) throw InvalidParameter("fan needs at least one detector");
  if (hv_modes.empty()) throw InvalidParameter("fan needs at least one mode pair");
  const Occupation vac(std::vector<int>(state.mode_count(), 0));
  const double scale = 1.0 / (detectors * std::numbers::sqrt2);

  // Depth-first over detectors; each level applies b_n restricted to one
  // internal mode and branches over all internal modes.
  double total = 0.0;
  auto descend = [&](auto&& self, const FockVector& current, int detector) -> void {
    if (current.empty()) return;
    if (detector == detectors) {
      total += std::norm(current.amplitude(vac));
      return;
    }
    const double twist = 2.0 * std::numbers::pi * detector / detectors;
    for (const auto& [hm, vm] : hv_modes) {
      FockVector next = scale * apply_annihilation(current, hm) +
                        std::polar(-scale, twist) * apply_annihilation(current, vm);
      self(self, next, detector + 1);
    }
  };
  descend(descend, state, 0);
  return total;
}

}  // namespace multiphoton
