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

#include <complex>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "multiphoton/distinguishability.hpp"
#include "multiphoton/experiments.hpp"
#include "multiphoton/linear_optics.hpp"
#include "multiphoton/permanent.hpp"

namespace {

using namespace multiphoton;

void BM_Permanent(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
}
BENCHMARK(BM_Permanent)->DenseRange(2, 12, 2);

void BM_ApplySplitter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FockVector input = make_basis_state({n, n});
  const Splitter s(0.3, 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply_splitter(input, s));
}
BENCHMARK(BM_ApplySplitter)->DenseRange(1, 6);

// Photons split between H and V, V half-delayed: exercises the embedding
// plus the fan coincidence on a multi-internal-mode state.
void BM_FanWithDistinguishability(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<GaussianPacket> packets;
  std::vector<std::size_t> pol;
  for (int p = 0; p < n; ++p) {
    packets.push_back({0.0, 1.0, p % 2 == 0 ? 0.0 : 0.7});
    pol.push_back(p == 0 ? 0u : 1u);
  }
  const PacketSet set(packets);
  const Network net{Splitter(0.5, 0, 1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(fan_coincidence_with_distinguishability(set, pol, net));
}
BENCHMARK(BM_FanWithDistinguishability)->DenseRange(2, 4);

void BM_VisibilityExperiment(benchmark::State& state) {
  experiments::VisibilityParams p;
  p.photons = static_cast<int>(state.range(0));
  p.overlapping = 1;
  for (auto _ : state) benchmark::DoNotOptimize(experiments::run_visibility_vs_distinguishability(p));
}
BENCHMARK(BM_VisibilityExperiment)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
