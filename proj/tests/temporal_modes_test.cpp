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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "multiphoton/errors.hpp"
#include "multiphoton/linear_optics.hpp"
#include "multiphoton/temporal_modes.hpp"
#include "support/network_unitary.hpp"
#include "support/oracles.hpp"

namespace multiphoton {
namespace {

// Detection probability for photons entering distinct modes `inputs` with
// overlap matrix S(a, b) = <phi_a|phi_b>: a double sum over assignments of
// photons to the detected output slots.
double partial_distinguishability_oracle(const oracle::Matrix& u, const oracle::Matrix& s,
                                         const std::vector<int>& inputs,
                                         const std::vector<int>& outputs_per_mode) {
  std::vector<int> slots;
  double multiplicity = 1.0;
  for (std::size_t k = 0; k < outputs_per_mode.size(); ++k) {
    slots.insert(slots.end(), outputs_per_mode[k], static_cast<int>(k));
    multiplicity *= oracle::factorial(outputs_per_mode[k]);
  }
  const int n = static_cast<int>(inputs.size());
  if (static_cast<int>(slots.size()) != n) return 0.0;
  std::vector<int> sigma(n), tau(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  oracle::Complex total = 0.0;
  do {
    std::iota(tau.begin(), tau.end(), 0);
    do {
      oracle::Complex term = 1.0;
      for (int j = 0; j < n; ++j) {
        term *= u(inputs[sigma[j]], slots[j]) * std::conj(u(inputs[tau[j]], slots[j])) *
                s(tau[j], sigma[j]);
      }
      total += term;
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total.real() / multiplicity;
}

Network random_network(std::mt19937_64& rng, int modes, int depth) {
  std::uniform_real_distribution<double> u;
  std::uniform_int_distribution<int> pick(0, modes - 1);
  Network net;
  for (int d = 0; d < depth; ++d) {
    const int a = pick(rng);
    int b = pick(rng);
    if (b == a) b = (a + 1) % modes;
    net.push_back(Splitter(u(rng), static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
    net.push_back(PhaseShift{static_cast<std::size_t>(pick(rng)), 6.0 * u(rng)});
  }
  return net;
}

TEST(Permanent, MatchesPermutationSum) {
  std::mt19937_64 rng(1);
  for (int n = 0; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const oracle::Matrix m = oracle::random_matrix(rng, n);
      const Complex expected = oracle::permanent(m);
      EXPECT_NEAR(std::abs(permanent(m) - expected), 0.0, 1e-12 * std::max(1.0, std::abs(expected)))
          << "n=" << n;
    }
  }
}

TEST(Permanent, KnownValuesAndLimits) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_NEAR(permanent(ComplexMatrix::Ones(n, n)).real(), std::tgamma(n + 1.0), 1e-9);
  }
  EXPECT_THROW(permanent(ComplexMatrix::Ones(2, 3)), InvalidParameter);
  EXPECT_THROW(permanent(ComplexMatrix::Ones(13, 13)), ShellOverflow);
}

TEST(Normalization, BoundedByOneAndFactorial) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const PacketSet set = PacketSet::from_gram(oracle::random_gram(rng, n, 1 + trial % 3));
      const double c = normalization_constant(set);
      EXPECT_GE(c, 1.0 - 1e-12);
      EXPECT_LE(c, std::tgamma(n + 1.0) * (1 + 1e-12));
    }
    EXPECT_NEAR(normalization_constant(DistinguishabilityScenario::all_identical(n).packet_set()),
                std::tgamma(n + 1.0), 1e-9);
    EXPECT_NEAR(
        normalization_constant(DistinguishabilityScenario::all_distinguishable(n).packet_set()),
        1.0, 1e-12);
  }
}

TEST(PacketOverlap, AgreesWithQuadrature) {
  const GaussianPacket cases[][2] = {
      {{0.0, 1.0, 0.0}, {0.0, 1.0, 1.3}},
      {{2.0, 0.7, 0.5}, {2.5, 1.2, -0.4}},
      {{50.0, 1.0, 0.0}, {50.3, 0.9, 2.0}},
  };
  for (const auto& [a, b] : cases) {
    const double lo = std::min(a.center_frequency, b.center_frequency) - 20.0;
    const double hi = std::max(a.center_frequency, b.center_frequency) + 20.0;
    const double re = oracle::integrate(
        [&](double w) { return (std::conj(a.amplitude(w)) * b.amplitude(w)).real(); }, lo, hi);
    const double im = oracle::integrate(
        [&](double w) { return (std::conj(a.amplitude(w)) * b.amplitude(w)).imag(); }, lo, hi);
    const Complex s = packet_overlap(a, b);
    EXPECT_NEAR(s.real(), re, 1e-10);
    EXPECT_NEAR(s.imag(), im, 1e-10);
  }
  const GaussianPacket p{3.0, 0.8, 0.0};
  const GaussianPacket q{3.0, 0.8, 1.7};
  EXPECT_NEAR(std::abs(packet_overlap(p, q)), std::exp(-0.5 * 0.64 * 1.7 * 1.7), 1e-14);
  EXPECT_THROW(packet_overlap({0.0, 0.0, 0.0}, p), InvalidParameter);
}

TEST(PacketSet, GramValidation) {
  ComplexMatrix bad_diag = ComplexMatrix::Identity(2, 2);
  bad_diag(1, 1) = 0.9;
  EXPECT_THROW(PacketSet::from_gram(bad_diag), InvalidParameter);
  ComplexMatrix not_hermitian = ComplexMatrix::Identity(2, 2);
  not_hermitian(0, 1) = 0.5;
  EXPECT_THROW(PacketSet::from_gram(not_hermitian), InvalidParameter);
  ComplexMatrix indefinite = ComplexMatrix::Ones(3, 3);
  indefinite(0, 1) = indefinite(1, 0) = -1.0;
  EXPECT_THROW(PacketSet::from_gram(indefinite), IndefiniteGram);
  EXPECT_THROW(DistinguishabilityScenario(3, {{0, 1}}), InvalidParameter);
  EXPECT_THROW(DistinguishabilityScenario(2, {{0, 1}, {1}}), InvalidParameter);
}

TEST(Embedding, RankFollowsLinearIndependence) {
  EXPECT_EQ(embed_internal_modes(DistinguishabilityScenario::all_identical(4).packet_set()).rank(), 1u);
  EXPECT_EQ(
      embed_internal_modes(DistinguishabilityScenario::all_distinguishable(4).packet_set()).rank(),
      4u);
  EXPECT_EQ(embed_internal_modes(DistinguishabilityScenario(4, {{0, 2}, {1, 3}}).packet_set()).rank(),
            2u);
  std::mt19937_64 rng(5);
  const auto gram = oracle::random_gram(rng, 5, 2);
  const auto embedding = embed_internal_modes(PacketSet::from_gram(gram));
  EXPECT_EQ(embedding.rank(), 2u);
  const ComplexMatrix c = embedding.coefficients();
  // Rows are the packets in an orthonormal internal basis: c^* c^T = G.
  EXPECT_LT((c.conjugate() * c.transpose() - gram).norm(), 1e-10);
}

TEST(Embedding, IdenticalPacketsReproducePureStatePipeline) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int modes = 3;
    const int photons = 2 + trial % 4;
    std::uniform_int_distribution<int> pick(0, modes - 1);
    std::vector<std::size_t> spatial;
    std::vector<int> counts(modes, 0);
    for (int p = 0; p < photons; ++p) {
      const int m = pick(rng);
      spatial.push_back(static_cast<std::size_t>(m));
      ++counts[m];
    }
    const Network net = random_network(rng, modes, 4);
    const auto dist = distribution_with_distinguishability(
        DistinguishabilityScenario::all_identical(photons).packet_set(), spatial, modes, net);
    const FockVector pure = apply_network(make_basis_state(Occupation(counts)), net);
    for (const auto& occ : photon_shell(modes, photons)) {
      const auto it = dist.find(occ);
      const double p = it == dist.end() ? 0.0 : it->second;
      EXPECT_NEAR(p, outcome_probability(pure, occ), 1e-10);
    }
  }
}

TEST(Embedding, OrthogonalPacketsReproduceClassicalPipeline) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const int modes = 3;
    const int photons = 2 + trial % 4;
    std::uniform_int_distribution<int> pick(0, modes - 1);
    std::vector<std::size_t> spatial;
    std::vector<int> counts(modes, 0);
    for (int p = 0; p < photons; ++p) {
      const int m = pick(rng);
      spatial.push_back(static_cast<std::size_t>(m));
      ++counts[m];
    }
    const Network net = random_network(rng, modes, 4);
    const auto dist = distribution_with_distinguishability(
        DistinguishabilityScenario::all_distinguishable(photons).packet_set(), spatial, modes,
        net);
    const auto u = oracle::network_unitary(net, modes);
    for (const auto& occ : photon_shell(modes, photons)) {
      const auto a = dist.find(occ);
      const std::vector<int> out(occ.counts().begin(), occ.counts().end());
      EXPECT_NEAR(a == dist.end() ? 0.0 : a->second,
                  oracle::classical_probability(u, counts, out), 1e-10);
    }
  }
}

TEST(Embedding, PartialDistinguishabilityAgreesWithPermutationOracle) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 15; ++trial) {
    const int photons = 2 + trial % 3;
    const int modes = photons + 1;
    const auto gram = oracle::random_gram(rng, photons, 1 + trial % photons);
    const Network net = random_network(rng, modes, 6);
    const auto u = oracle::network_unitary(net, modes);
    std::vector<std::size_t> spatial;
    std::vector<int> inputs;
    for (int p = 0; p < photons; ++p) {
      spatial.push_back(static_cast<std::size_t>(p));
      inputs.push_back(p);
    }
    const PacketSet packets = PacketSet::from_gram(gram);
    const auto dist = distribution_with_distinguishability(packets, spatial, modes, net);
    double total = 0.0;
    for (const auto& occ : photon_shell(modes, photons)) {
      const std::vector<int> out(occ.counts().begin(), occ.counts().end());
      const double expected = partial_distinguishability_oracle(u, gram, inputs, out);
      const auto it = dist.find(occ);
      EXPECT_NEAR(it == dist.end() ? 0.0 : it->second, expected, 1e-10);
      total += expected;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(Embedding, CoincidenceHonoursPattern) {
  const std::size_t spatial[] = {0, 1};
  const Network net{Splitter(0.5, 0, 1)};
  const double hom = coincidence_with_distinguishability(
      PacketSet({{0.0, 1.0, 0.0}, {0.0, 1.0, 0.5}}), spatial, 2, net,
      OccupationPattern::exactly({1, 1}));
  EXPECT_NEAR(hom, 0.5 - 0.5 * std::exp(-0.25), 1e-12);
  EXPECT_THROW(coincidence_with_distinguishability(
                   DistinguishabilityScenario::all_identical(7).packet_set(),
                   std::vector<std::size_t>(7, 0), 2, net, OccupationPattern(2)),
               ShellOverflow);
}

TEST(FanCoincidence, IdenticalPacketsMatchPureState) {
  for (int n = 1; n <= 4; ++n) {
    for (int h = 0; h <= n; ++h) {
      std::vector<std::size_t> pol(static_cast<std::size_t>(n), 1);
      for (int k = 0; k < h; ++k) pol[static_cast<std::size_t>(k)] = 0;
      const double engine = fan_coincidence_with_distinguishability(
          DistinguishabilityScenario::all_identical(n).packet_set(), pol, {});
      const std::pair<std::size_t, std::size_t> hv[] = {{0, 1}};
      const double pure = fan_coincidence(make_basis_state({h, n - h}), hv, n);
      EXPECT_NEAR(engine, pure, 1e-12);
    }
  }
}

TEST(HomVisibility, SymmetricAmplitudeGivesOne) {
  const auto axis = FrequencyAxis::centered(0.0, 6.0, 96);
  const auto phi = JointAmplitude::sample(
      [](double w1, double w2) {
        return Complex(std::exp(-(w1 + w2) * (w1 + w2) / 8.0 - (w1 - w2) * (w1 - w2) / 2.0), 0.0);
      },
      axis, axis);
  EXPECT_NEAR(hom_visibility(phi), 1.0, 1e-12);
}

TEST(HomVisibility, DelayedPacketsAgainstQuadrature) {
  for (double sigma : {0.5, 1.0, 2.0}) {
    for (double tau : {0.0, 0.3, 0.8, 1.5}) {
      const GaussianPacket a{1.0, sigma, 0.0};
      const GaussianPacket b{1.0, sigma, tau / sigma};
      const double v = hom_visibility(JointAmplitude::separable(a, b, 256));
      // V = |<a|b>|^2 for a product amplitude.
      const double lo = 1.0 - 20 * sigma, hi = 1.0 + 20 * sigma;
      const double re = oracle::integrate(
          [&](double w) { return (std::conj(a.amplitude(w)) * b.amplitude(w)).real(); }, lo, hi);
      const double im = oracle::integrate(
          [&](double w) { return (std::conj(a.amplitude(w)) * b.amplitude(w)).imag(); }, lo, hi);
      EXPECT_NEAR(v, re * re + im * im, 1e-6) << "sigma=" << sigma << " tau=" << tau;
      EXPECT_NEAR(v, std::exp(-tau * tau), 1e-6);
    }
  }
  const auto a1 = FrequencyAxis::centered(0.0, 5.0, 32);
  const auto a2 = FrequencyAxis::centered(0.5, 5.0, 32);
  const auto skew = JointAmplitude::sample([](double, double) { return Complex(1.0); }, a1, a2);
  EXPECT_THROW(hom_visibility(skew), InvalidParameter);
}

TEST(PairQuantities, RankOneAmplitudeHasUnitRatio) {
  const auto pair = JointAmplitude::separable({0.0, 1.0, 0.0}, {0.0, 1.0, 0.7}, 64);
  const PairQuantities q = pair_quantities(pair);
  EXPECT_NEAR(q.ratio(), 1.0, 1e-12);
}

TEST(PairQuantities, CorrelatedAmplitudeBetweenZeroAndOne) {
  const auto axis = FrequencyAxis::centered(0.0, 8.0, 96);
  for (double corr : {0.0, 0.3, 0.6, 0.9}) {
    const auto phi = JointAmplitude::sample(
        [corr](double w1, double w2) {
          return Complex(std::exp(-(w1 * w1 + w2 * w2 - 2 * corr * w1 * w2) / 4.0), 0.0);
        },
        axis, axis);
    const double r = pair_quantities(phi).ratio();
    EXPECT_GE(r, 0.0);
    EXPECT_LE(r, 1.0 + 1e-12);
    if (corr == 0.0) {
      EXPECT_NEAR(r, 1.0, 1e-9);
    }
    if (corr > 0.5) {
      EXPECT_LT(r, 0.9);
    }
  }
}

TEST(PairQuantities, TraceIdentityMatchesFourFoldSum) {
  const auto axis = FrequencyAxis::centered(0.0, 3.0, 12);
  const auto phi = JointAmplitude::sample(
      [](double w1, double w2) {
        return std::polar(std::exp(-(w1 * w1 + w2 * w2 - w1 * w2) / 3.0), 0.4 * w1 - 0.2 * w2 * w2);
      },
      axis, axis);
  const auto& m = phi.grid();
  const double cell = axis.step * axis.step;
  double a = 0.0;
  Complex e = 0.0;
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a += std::norm(m(i, j)) * cell;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          e += m(i, j) * m(k, l) * std::conj(m(i, l)) * std::conj(m(k, j)) * cell * cell;
        }
      }
    }
  }
  const PairQuantities q = pair_quantities(phi, ConvergenceCheck::kSkip);
  EXPECT_NEAR(q.a, a * a, 1e-6 * a * a);
  EXPECT_NEAR(q.e, e.real(), 1e-6 * a * a);
  EXPECT_LT(std::abs(e.imag()), 1e-12);
}

TEST(PairQuantities, SeparatedPairsFollowOverlap) {
  for (double d : {0.0, 0.5, 1.0, 2.0}) {
    const auto first = JointAmplitude::separable({0.0, 1.0, 0.0}, {0.0, 1.0, 0.0}, 128);
    const auto second = JointAmplitude::separable({0.0, 1.0, d}, {0.0, 1.0, d}, 128);
    const PairQuantities q = pair_quantities(first, second);
    // E/A = |<f|g>|^2 for product pairs f f and g g.
    EXPECT_NEAR(q.ratio(), std::exp(-d * d), 1e-6) << "d=" << d;
  }
}

TEST(PairQuantities, CoarseGridIsRejected) {
  const auto axis = FrequencyAxis::centered(0.0, 5.0, 6);
  const auto phi = JointAmplitude::sample([](double, double) { return Complex(1.0); }, axis, axis);
  EXPECT_THROW(pair_quantities(phi), ResolutionError);
}

}  // namespace
}  // namespace multiphoton
