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

#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "multiphoton/fit.hpp"
#include "multiphoton/fock.hpp"
#include "multiphoton/scan_result.hpp"

namespace multiphoton {

/// One comparison of a computed value against its closed-form expectation.
/// Boolean properties are encoded as expected 1, actual 0 or 1, tolerance 0.
struct Check {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;

  bool passed() const;
};

struct ExperimentReport {
  ScanResult scan;
  std::vector<Check> checks;
  std::map<std::string, double> parameters;
  std::optional<FitSummary> fit;
  std::optional<FockVector> state;

  bool passed() const;
};

/// Inclusive linear grid.
struct Sweep {
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;

  std::vector<double> values() const;
};

namespace closed_form {

double pfleegor_mandel_correlation(double separation, double fringe_spacing);
double hom_coincidence(double transmissivity, double overlap_squared);
double classical_coincidence(double transmissivity);
double two_photon_bunching_ratio(double overlap_squared);
double stimulated_emission_quantum(int photons);
double stimulated_emission_classical(int photons);
double wang_kobayashi_probability(double transmissivity);
double fock_filter_amplitude(int photons, double transmissivity);
double two_pair_probability(double transmissivity);
double noon_fringe(int photons, double phase);
/// Output coefficients (|3,0>, |2,1>, |1,2>, |0,3>) of the coherent plus
/// two-photon mixing scheme at a 50:50 splitter.
std::vector<Complex> three_photon_output(Complex alpha, Complex eta);
double hofmann_probability(int photons);
double distinguishability_visibility(int photons, int overlapping);
double degree_of_coherence(int photons_first, int photons_second,
                           int indist_first, int indist_second);

}  // namespace closed_form

namespace experiments {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct PfleegorMandelParams {
  double fringe_spacing = 1.0;
  Sweep separation{0.0, 2.0, 81};
};
ExperimentReport run_pfleegor_mandel(const PfleegorMandelParams& params);

struct HomDipParams {
  double transmissivity = 0.5;
  double bandwidth = 1.0;
  Sweep delay{-5.0, 5.0, 81};  // in units of 1/bandwidth
};
ExperimentReport run_hom_dip(const HomDipParams& params);

struct BunchingParams {
  double bandwidth = 1.0;
  Sweep pair_delay{0.0, 5.0, 41};  // in units of 1/bandwidth
};
ExperimentReport run_bunching(const BunchingParams& params);

struct StimulatedEmissionParams {
  int max_photons = 5;
};
ExperimentReport run_stimulated_emission(const StimulatedEmissionParams& params);

struct NullScanParams {
  Sweep transmissivity{0.0, 1.0, 101};
};
ExperimentReport run_wang_kobayashi_null(const NullScanParams& params);
ExperimentReport run_two_pair_null(const NullScanParams& params);

struct FockFilterParams {
  std::vector<Complex> input_coefficients{1.0, 1.0, 1.0};
  double transmissivity = 2.0 / 3.0;
};
/// The report's state holds the renormalized single-mode output.
ExperimentReport run_fock_filter(const FockFilterParams& params);

struct NoonFringeParams {
  int photons = 4;
  Sweep phase{0.0, kTwoPi, 145};
};
ExperimentReport run_noon_fringe(const NoonFringeParams& params);

struct ThreePhotonNoonParams {
  Complex alpha{0.05, 0.0};
  Complex eta{0.0025 / std::numbers::sqrt2, 0.0};
};
ExperimentReport run_three_photon_noon_generation(const ThreePhotonNoonParams& params);

enum class DeBroglieScheme {
  kThreePhotonWK,
  kFourPhotonAsym,
  kFourPhotonSymmetric,
  kNoonProjection,
};
std::string to_string(DeBroglieScheme scheme);
DeBroglieScheme parse_de_broglie_scheme(std::string_view name);

struct DeBroglieParams {
  DeBroglieScheme scheme = DeBroglieScheme::kThreePhotonWK;
  int photons = 4;          // noon_projection only
  bool upper_root = true;   // four_photon_asym: T = (3 + sqrt3)/6 or (3 - sqrt3)/6
  Sweep phase{0.0, kTwoPi, 145};
};
ExperimentReport run_de_broglie_projection(const DeBroglieParams& params);

enum class VisibilityScheme { kNoonProjection, kAsymmetricSplitter };
std::string to_string(VisibilityScheme scheme);
VisibilityScheme parse_visibility_scheme(std::string_view name);

struct VisibilityParams {
  VisibilityScheme scheme = VisibilityScheme::kNoonProjection;
  int photons = 2;      // N photons sharing one polarization or port
  int overlapping = 2;  // m of them overlap the scanned photon at zero delay
  double bandwidth = 1.0;
  Sweep delay{-5.0, 5.0, 81};
};
ExperimentReport run_visibility_vs_distinguishability(const VisibilityParams& params);

struct FringeMonteCarloParams {
  int photons_first = 4;
  int photons_second = 4;
  int indist_first = 2;
  int indist_second = 2;
  int samples = 10000;
  int realizations = 100;
  int bins = 100;
  std::uint64_t seed = 1;
  double fringe_spacing = 1.0;
};
ExperimentReport run_fringe_montecarlo(const FringeMonteCarloParams& params);

}  // namespace experiments
}  // namespace multiphoton
