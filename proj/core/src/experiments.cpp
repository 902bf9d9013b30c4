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

#include "multiphoton/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "multiphoton/distinguishability.hpp"
#include "multiphoton/errors.hpp"
#include "multiphoton/linear_optics.hpp"
#include "multiphoton/tolerances.hpp"

namespace multiphoton {

bool Check::passed() const {
  return std::isfinite(actual) && std::abs(actual - expected) <= tolerance;
}

bool ExperimentReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed(); });
}

std::vector<double> Sweep::values() const {
  if (steps < 1) throw InvalidParameter("sweep needs at least one step");
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    throw InvalidParameter("sweep bounds must be finite");
  }
  if (steps == 1) return {start};
  std::vector<double> out(static_cast<std::size_t>(steps));
  const double step = (stop - start) / (steps - 1);
  for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = start + step * i;
  out.back() = stop;
  return out;
}

namespace closed_form {

double pfleegor_mandel_correlation(double separation, double fringe_spacing) {
  return 0.5 * std::cos(2.0 * std::numbers::pi * separation / fringe_spacing);
}

double hom_coincidence(double transmissivity, double overlap_squared) {
  const double t = transmissivity;
  const double r = 1.0 - t;
  return t * t + r * r - 2.0 * t * r * overlap_squared;
}

double classical_coincidence(double transmissivity) {
  return hom_coincidence(transmissivity, 0.0);
}

double two_photon_bunching_ratio(double overlap_squared) { return 1.0 + overlap_squared; }

double stimulated_emission_quantum(int photons) {
  return (photons + 1) / std::ldexp(1.0, photons + 1);
}

double stimulated_emission_classical(int photons) {
  return 1.0 / std::ldexp(1.0, photons + 1);
}

double wang_kobayashi_probability(double transmissivity) {
  const double t = transmissivity;
  const double r = 1.0 - t;
  return t * (t - 2.0 * r) * (t - 2.0 * r);
}

double fock_filter_amplitude(int photons, double transmissivity) {
  const double t = transmissivity;
  const double r = 1.0 - t;
  if (photons == 0) return std::sqrt(t);
  return std::sqrt(std::pow(t, photons - 1)) * (t - photons * r);
}

double two_pair_probability(double transmissivity) {
  const double t = transmissivity;
  const double r = 1.0 - t;
  const double amp = (t - r) * (t - r) - 2.0 * t * r;
  return amp * amp;
}

double noon_fringe(int photons, double phase) {
  return 0.5 * (1.0 + std::cos(photons * phase));
}

std::vector<Complex> three_photon_output(Complex alpha, Complex eta) {
  const double s2 = std::numbers::sqrt2;
  const Complex middle = (alpha * alpha - eta * s2) * alpha / 4.0;
  const Complex outer =
      (alpha * alpha + 3.0 * eta * s2) * alpha / (4.0 * std::numbers::sqrt3);
  return {outer, middle, middle, outer};
}

double hofmann_probability(int photons) {
  return 2.0 * std::tgamma(photons + 1.0) / std::pow(2.0 * photons, photons);
}

double distinguishability_visibility(int photons, int overlapping) {
  return static_cast<double>(overlapping) / photons;
}

double degree_of_coherence(int photons_first, int photons_second,
                           int indist_first, int indist_second) {
  return std::sqrt(static_cast<double>(indist_first) * indist_second /
                   (static_cast<double>(photons_first) * photons_second));
}

}  // namespace closed_form

namespace experiments {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidParameter(message);
}

void require_transmissivity(double t) {
  require(t >= 0.0 && t <= 1.0, "transmissivity must lie in [0, 1]");
}

Check check(std::string name, double expected, double actual, double tolerance) {
  return Check{std::move(name), expected, actual, tolerance};
}

Check check_true(std::string name, bool value) {
  return Check{std::move(name), 1.0, value ? 1.0 : 0.0, 0.0};
}

// Finds a sign change of f in [lo, hi] to within `width`.
template <typename F>
double bisect(F&& f, double lo, double hi, double width) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > width; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Complex splitter_amplitude(const Occupation& input, double t, const Occupation& output) {
  const Element bs = Splitter(t, 0, 1);
  return apply_network(make_basis_state(input), std::span(&bs, 1)).amplitude(output);
}

double even_port_probability(const FockVector& state) {
  double p = 0.0;
  for (const auto& [occ, amp] : state.terms()) {
    if (occ[0] % 2 == 0) p += std::norm(amp);
  }
  return p;
}

// Fit-based checks shared by the fringe experiments.
void add_fringe_checks(ExperimentReport& report, int photons) {
  const FitSummary& fit = *report.fit;
  const double period = 2.0 * std::numbers::pi / photons;
  report.checks.push_back(check("period", period, fit.period, 1e-3 * period));
  report.checks.push_back(check("subharmonic_ratio", 0.0, fit.max_subharmonic_ratio, 1e-6));
  report.checks.push_back(check("visibility", 1.0, fit.visibility, 1e-6));
}

}  // namespace

ExperimentReport run_pfleegor_mandel(const PfleegorMandelParams& params) {
  const double L = params.fringe_spacing;
  require(L > 0.0 && std::isfinite(L), "fringe spacing must be positive");
  const double dk = 2.0 * std::numbers::pi / L;
  // Two lasers with wave numbers k and k + dk; each photon reaches either
  // detector with amplitude exp(i k x) / sqrt(2).
  const double k1 = 3.0 * dk;
  const double k2 = 2.0 * dk;

  auto from_paths = [&](double x1, double x2) {
    auto a = [](double k, double x) { return std::polar(1.0 / std::numbers::sqrt2, k * x); };
    const double same1 = std::norm(a(k1, x1)) * std::norm(a(k1, x2));
    const double same2 = std::norm(a(k2, x1)) * std::norm(a(k2, x2));
    const double mixed = std::norm(a(k1, x1) * a(k2, x2) + a(k2, x1) * a(k1, x2));
    const double joint = same1 + same2 + mixed;
    const double single1 = std::norm(a(k1, x1)) + std::norm(a(k2, x1));
    const double single2 = std::norm(a(k1, x2)) + std::norm(a(k2, x2));
    return joint / (single1 * single2) - 1.0;
  };
  // Classical fields with a uniformly random relative phase; the 64-point
  // average is exact for the second-order trigonometric integrand.
  auto from_waves = [&](double x1, double x2) {
    constexpr int kPhases = 64;
    double joint = 0.0, mean1 = 0.0, mean2 = 0.0;
    for (int j = 0; j < kPhases; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / kPhases;
      const double i1 = std::norm(std::polar(1.0, k1 * x1) + std::polar(1.0, k2 * x1 + theta));
      const double i2 = std::norm(std::polar(1.0, k1 * x2) + std::polar(1.0, k2 * x2 + theta));
      joint += i1 * i2;
      mean1 += i1;
      mean2 += i2;
    }
    return kPhases * joint / (mean1 * mean2) - 1.0;
  };

  ExperimentReport report{
      ScanResult("pfleegor_mandel", "separation",
                 {"lambda_paths", "lambda_waves", "closed_form"}),
      {}, {{"fringe_spacing", L}}, std::nullopt, std::nullopt};
  double max_error = 0.0, wave_error = 0.0;
  for (double d : params.separation.values()) {
    const double paths = from_paths(d, 0.0);
    const double waves = from_waves(d, 0.0);
    const double expected = closed_form::pfleegor_mandel_correlation(d, L);
    max_error = std::max(max_error, std::abs(paths - expected));
    wave_error = std::max(wave_error, std::abs(waves - paths));
    report.scan.add_row(d, {paths, waves, expected});
  }
  report.checks.push_back(check("lambda_at_L", 0.5, from_paths(L, 0.0), 1e-12));
  report.checks.push_back(check("lambda_at_half_L", -0.5, from_paths(0.5 * L, 0.0), 1e-12));
  report.checks.push_back(check("lambda_at_quarter_L", 0.0, from_paths(0.25 * L, 0.0), 1e-12));
  report.checks.push_back(check("closed_form_max_error", 0.0, max_error, 1e-12));
  report.checks.push_back(check("waves_vs_paths_max_error", 0.0, wave_error, 1e-12));
  return report;
}

ExperimentReport run_hom_dip(const HomDipParams& params) {
  const double t = params.transmissivity;
  const double sigma = params.bandwidth;
  require_transmissivity(t);
  require(sigma > 0.0 && std::isfinite(sigma), "bandwidth must be positive");
  const Element bs = Splitter(t, 0, 1);
  const std::size_t modes[] = {0, 1};
  const auto pattern = OccupationPattern::exactly({1, 1});

  auto coincidence = [&](double scaled_delay) {
    const PacketSet packets({{0.0, sigma, 0.0}, {0.0, sigma, scaled_delay / sigma}});
    return coincidence_with_distinguishability(packets, modes, 2, std::span(&bs, 1), pattern);
  };

  ExperimentReport report{
      ScanResult("hom_dip", "scaled_delay", {"coincidence", "closed_form", "classical"}),
      {}, {{"transmissivity", t}, {"bandwidth", sigma}}, std::nullopt, std::nullopt};
  const double classical = closed_form::classical_coincidence(t);
  double max_error = 0.0;
  for (double x : params.delay.values()) {
    const double p = coincidence(x);
    const double expected = closed_form::hom_coincidence(t, std::exp(-x * x));
    max_error = std::max(max_error, std::abs(p - expected));
    report.scan.add_row(x, {p, expected, classical});
  }

  const double minimum = coincidence(0.0);
  const double baseline = coincidence(10.0);
  const double r = 1.0 - t;
  report.checks.push_back(check("dip_minimum", (t - r) * (t - r), minimum, 1e-12));
  report.checks.push_back(check("baseline", classical, baseline, 1e-12));
  if (baseline > 0.0) {
    report.checks.push_back(check("dip_visibility", 2.0 * t * r / classical,
                                  (baseline - minimum) / baseline, 1e-12));
  }
  report.checks.push_back(check("closed_form_max_error", 0.0, max_error, 1e-10));
  const PacketSet orthogonal = DistinguishabilityScenario::all_distinguishable(2).packet_set();
  const double distinguishable = coincidence_with_distinguishability(
      orthogonal, modes, 2, std::span(&bs, 1), pattern);
  report.checks.push_back(check("distinguishable_limit_vs_classical",
                                classical_outcome_probability({1, 1}, Splitter(t, 0, 1), {1, 1}),
                                distinguishable, 1e-8));
  return report;
}

ExperimentReport run_bunching(const BunchingParams& params) {
  const double sigma = params.bandwidth;
  require(sigma > 0.0 && std::isfinite(sigma), "bandwidth must be positive");
  const Element bs = Splitter(0.5, 0, 1);
  const auto net = std::span(&bs, 1);
  const std::size_t two_modes[] = {0, 1};
  const std::size_t four_modes[] = {0, 1, 0, 1};
  const auto two_pattern = OccupationPattern::exactly({2, 0});
  const auto four_pattern = OccupationPattern::exactly({4, 0});
  const double two_classical = classical_outcome_probability({1, 1}, Splitter(0.5, 0, 1), {2, 0});
  const double four_classical = classical_outcome_probability({2, 2}, Splitter(0.5, 0, 1), {4, 0});

  auto two_ratio = [&](double x) {
    const PacketSet packets({{0.0, sigma, 0.0}, {0.0, sigma, x / sigma}});
    return coincidence_with_distinguishability(packets, two_modes, 2, net, two_pattern) /
           two_classical;
  };
  auto pair_ratio_of = [&](const PacketSet& packets) {
    return coincidence_with_distinguishability(packets, four_modes, 2, net, four_pattern) /
           four_classical;
  };
  auto pair_ratio = [&](double x) {
    const double d = x / sigma;
    return pair_ratio_of(
        PacketSet({{0.0, sigma, 0.0}, {0.0, sigma, 0.0}, {0.0, sigma, d}, {0.0, sigma, d}}));
  };

  ExperimentReport report{
      ScanResult("bunching", "scaled_pair_delay",
                 {"pair_ratio", "two_photon_ratio", "two_photon_closed_form"}),
      {}, {{"bandwidth", sigma}}, std::nullopt, std::nullopt};
  double two_error = 0.0;
  bool monotone = true;
  double previous = 0.0;
  bool first = true;
  const auto delays = params.pair_delay.values();
  for (double x : delays) {
    const double pr = pair_ratio(x);
    const double tr = two_ratio(x);
    const double expected = closed_form::two_photon_bunching_ratio(std::exp(-x * x));
    two_error = std::max(two_error, std::abs(tr - expected));
    report.scan.add_row(x, {pr, tr, expected});
  }
  // Monotone in |delay|: walk the rows outward from the smallest |x|.
  std::vector<std::pair<double, double>> by_distance;
  for (const auto& row : report.scan.rows()) {
    by_distance.emplace_back(std::abs(row.parameter), row.values[0]);
  }
  std::sort(by_distance.begin(), by_distance.end());
  for (const auto& [dist, ratio] : by_distance) {
    if (!first && ratio > previous + 1e-12) monotone = false;
    previous = ratio;
    first = false;
  }

  const double pure = outcome_probability(
      apply_network(make_basis_state({2, 2}), net), Occupation{4, 0});
  report.checks.push_back(check("two_photon_ratio", 2.0, two_ratio(0.0), 1e-12));
  report.checks.push_back(check("pure_state_probability", 3.0 / 8.0, pure, 1e-12));
  report.checks.push_back(check("ratio", 6.0, pair_ratio(0.0), 1e-12));
  report.checks.push_back(check(
      "ratio_separated_pairs", 4.0,
      pair_ratio_of(DistinguishabilityScenario(4, {{0, 1}, {2, 3}}).packet_set()), 1e-12));
  report.checks.push_back(check_true("pair_ratio_monotone", monotone));
  report.checks.push_back(check("two_photon_closed_form_max_error", 0.0, two_error, 1e-10));
  report.checks.push_back(check(
      "distinguishable_limit_vs_classical", 1.0,
      pair_ratio_of(DistinguishabilityScenario::all_distinguishable(4).packet_set()), 1e-8));
  return report;
}

ExperimentReport run_stimulated_emission(const StimulatedEmissionParams& params) {
  require(params.max_photons >= 1 && params.max_photons <= 5,
          "max_photons must lie in 1..5");
  ExperimentReport report{
      ScanResult("stimulated_emission", "photons",
                 {"quantum", "classical", "enhancement", "quantum_closed_form",
                  "classical_closed_form"}),
      {}, {{"max_photons", params.max_photons}}, std::nullopt, std::nullopt};
  const Splitter splitter(0.5, 0, 1);
  const Element bs = splitter;
  for (int n = 1; n <= params.max_photons; ++n) {
    const Occupation input{n, 1};
    const Occupation output{n + 1, 0};
    const double quantum =
        outcome_probability(apply_network(make_basis_state(input), std::span(&bs, 1)), output);
    const double classical = classical_outcome_probability(input, splitter, output);
    const double q_expected = closed_form::stimulated_emission_quantum(n);
    const double c_expected = closed_form::stimulated_emission_classical(n);
    report.scan.add_row(n, {quantum, classical, quantum / classical, q_expected, c_expected});
    const std::string suffix = "_N" + std::to_string(n);
    report.checks.push_back(check("quantum" + suffix, q_expected, quantum, 1e-12));
    report.checks.push_back(check("classical" + suffix, c_expected, classical, 1e-12));
    report.checks.push_back(check("enhancement" + suffix, n + 1.0, quantum / classical, 1e-10));
  }
  return report;
}

ExperimentReport run_wang_kobayashi_null(const NullScanParams& params) {
  const Occupation io{2, 1};
  ExperimentReport report{
      ScanResult("wang_kobayashi_null", "transmissivity",
                 {"probability", "closed_form", "amplitude"}),
      {}, {}, std::nullopt, std::nullopt};
  double max_error = 0.0;
  for (double t : params.transmissivity.values()) {
    require_transmissivity(t);
    const Complex amp = splitter_amplitude(io, t, io);
    const double expected = closed_form::wang_kobayashi_probability(t);
    max_error = std::max(max_error, std::abs(std::norm(amp) - expected));
    report.scan.add_row(t, {std::norm(amp), expected, amp.real()});
  }
  const double root = bisect([&](double t) { return splitter_amplitude(io, t, io).real(); },
                             0.5, 0.9, 1e-13);
  report.parameters["null_transmissivity"] = root;

  const double t0 = 2.0 / 3.0;
  const Element bs = Splitter(t0, 0, 1);
  const FockVector out = apply_network(make_basis_state(io), std::span(&bs, 1));
  // The textbook form of this output uses the opposite reflection sign on
  // the first port; a pi phase on output mode 0 converts between the two.
  const Element fix = PhaseShift{0, std::numbers::pi};
  const FockVector textbook = apply_network(out, std::span(&fix, 1));

  report.checks.push_back(check("null_transmissivity", t0, root, 1e-10));
  report.checks.push_back(check("probability_at_null", 0.0, outcome_probability(out, io), 1e-12));
  report.checks.push_back(check("amplitude_30", 2.0 / 3.0, textbook.amplitude({3, 0}).real(), 1e-12));
  report.checks.push_back(check("amplitude_03", std::numbers::sqrt2 / 3.0,
                                textbook.amplitude({0, 3}).real(), 1e-12));
  report.checks.push_back(check("amplitude_12", -std::numbers::sqrt3 / 3.0,
                                textbook.amplitude({1, 2}).real(), 1e-12));
  report.checks.push_back(check("closed_form_max_error", 0.0, max_error, 1e-12));
  report.state = out;
  return report;
}

ExperimentReport run_fock_filter(const FockFilterParams& params) {
  const double t = params.transmissivity;
  require_transmissivity(t);
  const auto& coeffs = params.input_coefficients;
  require(!coeffs.empty() && coeffs.size() <= 6,
          "input must have 1..6 coefficients (shell <= 6 with the ancilla)");
  double norm = 0.0;
  for (const Complex& c : coeffs) norm += std::norm(c);
  require(norm > 0.0 && std::isfinite(norm), "input coefficients must not all vanish");
  const double scale = 1.0 / std::sqrt(norm);

  Terms terms;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    terms.emplace(Occupation{static_cast<int>(n), 1}, coeffs[n] * scale);
  }
  const FockVector input(2, std::move(terms), true);
  const Element bs = Splitter(t, 0, 1);
  const FockVector out = apply_network(input, std::span(&bs, 1));

  ExperimentReport report{
      ScanResult("fock_filter", "photons",
                 {"input_amplitude_re", "input_amplitude_im", "output_amplitude_re",
                  "output_amplitude_im", "closed_form_re", "closed_form_im", "filter_factor"}),
      {}, {{"transmissivity", t}}, std::nullopt, std::nullopt};
  double max_error = 0.0;
  Terms conditioned;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const int photons = static_cast<int>(n);
    const Complex c = coeffs[n] * scale;
    const Complex amp = out.amplitude({photons, 1});
    const double factor = closed_form::fock_filter_amplitude(photons, t);
    const Complex expected = c * factor;
    max_error = std::max(max_error, std::abs(amp - expected));
    report.scan.add_row(photons, {c.real(), c.imag(), amp.real(), amp.imag(),
                                  expected.real(), expected.imag(), factor});
    conditioned.emplace(Occupation{photons}, amp);
  }
  report.checks.push_back(check("amplitude_law_max_error", 0.0, max_error, 1e-12));

  const double r = 1.0 - t;
  if (r > 0.0) {
    const double ratio = t / r;
    const double nearest = std::round(ratio);
    if (std::abs(ratio - nearest) < 1e-9 && nearest >= 1.0 &&
        nearest < static_cast<double>(coeffs.size())) {
      const int n0 = static_cast<int>(nearest);
      report.parameters["filtered_photons"] = n0;
      report.checks.push_back(check("filtered_component_n" + std::to_string(n0), 0.0,
                                    std::abs(out.amplitude({n0, 1})), 1e-10));
    }
  }
  FockVector state(1, std::move(conditioned));
  const double success = state.norm_squared();
  report.parameters["success_probability"] = success;
  report.state = success > 0.0 ? state.normalized() : state;
  return report;
}

ExperimentReport run_two_pair_null(const NullScanParams& params) {
  const Occupation io{2, 2};
  ExperimentReport report{
      ScanResult("two_pair_null", "transmissivity", {"probability", "closed_form", "amplitude"}),
      {}, {}, std::nullopt, std::nullopt};
  double max_error = 0.0;
  for (double t : params.transmissivity.values()) {
    require_transmissivity(t);
    const Complex amp = splitter_amplitude(io, t, io);
    const double expected = closed_form::two_pair_probability(t);
    max_error = std::max(max_error, std::abs(std::norm(amp) - expected));
    report.scan.add_row(t, {std::norm(amp), expected, amp.real()});
  }
  auto amplitude = [&](double t) { return splitter_amplitude(io, t, io).real(); };
  const double lower = bisect(amplitude, 0.0, 0.5, 1e-13);
  const double upper = bisect(amplitude, 0.5, 1.0, 1e-13);
  report.parameters["null_lower"] = lower;
  report.parameters["null_upper"] = upper;

  const double s3 = std::numbers::sqrt3;
  report.checks.push_back(check("null_lower", (3.0 - s3) / 6.0, lower, 1e-10));
  report.checks.push_back(check("null_upper", (3.0 + s3) / 6.0, upper, 1e-10));
  report.checks.push_back(check("probability_at_null", 0.0,
                                std::norm(splitter_amplitude(io, (3.0 + s3) / 6.0, io)), 1e-12));
  report.checks.push_back(check("probability_at_half", 0.25,
                                std::norm(splitter_amplitude(io, 0.5, io)), 1e-12));

  // Side coefficients at a generic splitter, in the textbook sign convention.
  const double tg = 0.3;
  const Element net[] = {Splitter(tg, 0, 1), PhaseShift{0, std::numbers::pi}};
  const FockVector out = apply_network(make_basis_state(io), net);
  report.checks.push_back(check("amplitude_31", std::sqrt(6.0 * tg * (1 - tg)) * (2 * tg - 1),
                                out.amplitude({3, 1}).real(), 1e-12));
  report.checks.push_back(check("amplitude_40", std::sqrt(6.0) * tg * (1 - tg),
                                out.amplitude({4, 0}).real(), 1e-12));
  report.checks.push_back(check("closed_form_max_error", 0.0, max_error, 1e-12));
  return report;
}

ExperimentReport run_noon_fringe(const NoonFringeParams& params) {
  const int n = params.photons;
  require(n >= 1 && n <= 6, "photons must lie in 1..6");
  const FockVector noon = make_noon(n);
  ExperimentReport report{ScanResult("noon_fringe", "phase", {"probability", "closed_form"}),
                          {}, {{"photons", n}}, std::nullopt, std::nullopt};
  auto probability = [&](double phi) {
    const Element net[] = {PhaseShift{1, phi}, Splitter(0.5, 0, 1)};
    return even_port_probability(apply_network(noon, net));
  };
  double max_error = 0.0;
  std::vector<double> x, y;
  for (double phi : params.phase.values()) {
    const double p = probability(phi);
    const double expected = closed_form::noon_fringe(n, phi);
    max_error = std::max(max_error, std::abs(p - expected));
    report.scan.add_row(phi, {p, expected});
    x.push_back(phi);
    y.push_back(p);
  }
  report.fit = fit_fringe(x, y, 2 * n, 2.0 * std::numbers::pi);
  add_fringe_checks(report, n);
  report.checks.push_back(check("peak_at_zero_phase", 1.0, probability(0.0), 1e-12));
  report.checks.push_back(check("closed_form_max_error", 0.0, max_error, 1e-12));
  return report;
}

ExperimentReport run_three_photon_noon_generation(const ThreePhotonNoonParams& params) {
  const Complex alpha = params.alpha;
  const Complex eta = params.eta;
  require(std::isfinite(std::abs(alpha)) && std::isfinite(std::abs(eta)),
          "alpha and eta must be finite");
  // Neglected weight: coherent photon numbers above 3 and the four-photon
  // down-conversion term.
  const double x = std::norm(alpha);
  double tail = 0.0;
  double term = std::exp(-x);
  for (int k = 1; k <= 60; ++k) {
    term *= x / k;
    if (k >= 4) tail += term;
  }
  const double truncation = tail + std::norm(eta) * std::norm(eta);
  if (truncation > 1e-8) {
    throw TruncationViolation("three-photon truncation error " + std::to_string(truncation) +
                              " exceeds 1e-8; reduce |alpha| or |eta|");
  }

  Terms coherent;
  Complex power = 1.0;
  for (int k = 0; k <= 3; ++k) {
    coherent.emplace(Occupation{k}, power / std::sqrt(std::tgamma(k + 1.0)));
    power *= alpha;
  }
  const FockVector pair(1, Terms{{Occupation{0}, 1.0}, {Occupation{2}, eta}});
  const FockVector product = tensor(FockVector(1, std::move(coherent)), pair);
  Terms shell;
  for (const auto& [occ, amp] : product.terms()) {
    if (occ.total() == 3) shell.emplace(occ, amp);
  }
  const Element bs = Splitter(0.5, 0, 1);
  const FockVector out = apply_network(FockVector(2, std::move(shell)), std::span(&bs, 1));

  const std::vector<Complex> expected = closed_form::three_photon_output(alpha, eta);
  const Occupation basis[] = {{3, 0}, {2, 1}, {1, 2}, {0, 3}};
  ExperimentReport report{
      ScanResult("three_photon_noon_generation", "basis_index",
                 {"amplitude_re", "amplitude_im", "closed_form_re", "closed_form_im"}),
      {}, {{"alpha_re", alpha.real()}, {"alpha_im", alpha.imag()},
           {"eta_re", eta.real()}, {"eta_im", eta.imag()},
           {"truncation_error", truncation}},
      std::nullopt, std::nullopt};
  double max_error = 0.0;
  double scale = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Complex amp = out.amplitude(basis[i]);
    max_error = std::max(max_error, std::abs(amp - expected[i]));
    scale = std::max(scale, std::abs(expected[i]));
    report.scan.add_row(i, {amp.real(), amp.imag(), expected[i].real(), expected[i].imag()});
  }
  auto fidelity_of = [](Complex c30, Complex c03, double norm) {
    return norm > 0.0 ? std::norm(c30 + c03) / (2.0 * norm) : 0.0;
  };
  const double fidelity =
      fidelity_of(out.amplitude(basis[0]), out.amplitude(basis[3]), out.norm_squared());
  double expected_norm = 0.0;
  for (const Complex& c : expected) expected_norm += std::norm(c);
  report.parameters["noon_fidelity"] = fidelity;
  report.parameters["shell_probability"] = out.norm_squared();

  report.checks.push_back(check("coefficients_max_error", 0.0, max_error, 1e-12 * scale));
  report.checks.push_back(check("noon_fidelity", fidelity_of(expected[0], expected[3], expected_norm),
                                fidelity, 1e-12));
  const Complex mismatch = alpha * alpha - eta * std::numbers::sqrt2;
  if (std::abs(mismatch) <= 1e-12 * std::norm(alpha) && scale > 0.0) {
    report.checks.push_back(check("middle_coefficients", 0.0,
                                  std::max(std::abs(out.amplitude(basis[1])),
                                           std::abs(out.amplitude(basis[2]))) / scale,
                                  1e-12));
    report.checks.push_back(check("noon_fidelity_at_balance", 1.0, fidelity, 1e-12));
  }
  report.state = out;
  return report;
}

std::string to_string(DeBroglieScheme scheme) {
  switch (scheme) {
    case DeBroglieScheme::kThreePhotonWK: return "three_photon_WK";
    case DeBroglieScheme::kFourPhotonAsym: return "four_photon_asym";
    case DeBroglieScheme::kFourPhotonSymmetric: return "four_photon_symmetric";
    case DeBroglieScheme::kNoonProjection: return "noon_projection";
  }
  throw InvalidParameter("unknown de Broglie scheme");
}

DeBroglieScheme parse_de_broglie_scheme(std::string_view name) {
  for (auto s : {DeBroglieScheme::kThreePhotonWK, DeBroglieScheme::kFourPhotonAsym,
                 DeBroglieScheme::kFourPhotonSymmetric, DeBroglieScheme::kNoonProjection}) {
    if (to_string(s) == name) return s;
  }
  throw InvalidParameter("unknown de Broglie scheme '" + std::string(name) + "'");
}

ExperimentReport run_de_broglie_projection(const DeBroglieParams& params) {
  const DeBroglieScheme scheme = params.scheme;
  int photons = 0;
  std::function<double(double)> rate;
  std::function<double(double)> reference;  // closed form up to a constant

  const double s3 = std::numbers::sqrt3;
  auto interferometer = [](Occupation input, double t1, double t2, Occupation measured) {
    const FockVector in = make_basis_state(input);
    return [=](double phi) {
      const Element net[] = {Splitter(t1, 0, 1), PhaseShift{1, phi}, Splitter(t2, 0, 1)};
      return outcome_probability(apply_network(in, net), measured);
    };
  };
  switch (scheme) {
    case DeBroglieScheme::kThreePhotonWK:
      photons = 3;
      rate = interferometer({2, 1}, 2.0 / 3.0, 2.0 / 3.0, {1, 2});
      reference = [](double phi) { return 1.0 + std::cos(3.0 * phi); };
      break;
    case DeBroglieScheme::kFourPhotonAsym: {
      photons = 4;
      const double t = params.upper_root ? (3.0 + s3) / 6.0 : (3.0 - s3) / 6.0;
      rate = interferometer({2, 2}, t, 0.5, {2, 2});
      break;
    }
    case DeBroglieScheme::kFourPhotonSymmetric:
      photons = 4;
      rate = interferometer({2, 2}, 0.5, 0.5, {3, 1});
      break;
    case DeBroglieScheme::kNoonProjection: {
      photons = params.photons;
      require(photons >= 1 && photons <= 6, "photons must lie in 1..6");
      // N-photon shell of equal-strength coherent fields in H and V.
      std::vector<double> weights;
      double norm = 0.0;
      for (int k = 0; k <= photons; ++k) {
        const double w = 1.0 / std::sqrt(std::tgamma(photons - k + 1.0) * std::tgamma(k + 1.0));
        weights.push_back(w);
        norm += w * w;
      }
      for (double& w : weights) w /= std::sqrt(norm);
      auto coefficients = [=](double phi) {
        std::vector<Complex> c;
        for (int k = 0; k <= photons; ++k) c.push_back(std::polar(weights[k], k * phi));
        return c;
      };
      rate = [=](double phi) {
        const auto c = coefficients(phi);
        Terms terms;
        for (int k = 0; k <= photons; ++k) terms.emplace(Occupation{photons - k, k}, c[k]);
        const std::pair<std::size_t, std::size_t> hv[] = {{0, 1}};
        return fan_coincidence(FockVector(2, std::move(terms), true), hv, photons);
      };
      reference = [=](double phi) { return noon_projection_rate(coefficients(phi), photons); };
      break;
    }
  }

  ExperimentReport report{
      ScanResult("de_broglie_projection", "phase", {"rate"}),
      {}, {{"photons", photons}}, std::nullopt, std::nullopt};
  report.scan.set_metadata("scheme", to_string(scheme));
  std::vector<double> x, y;
  for (double phi : params.phase.values()) {
    const double r = rate(phi);
    report.scan.add_row(phi, {r});
    x.push_back(phi);
    y.push_back(r);
  }
  report.fit = fit_fringe(x, y, 2 * photons, 2.0 * std::numbers::pi);
  add_fringe_checks(report, photons);

  const double amplitude = report.fit->parameter("amplitude").value;
  if (reference) {
    // Ratio to the closed form must be constant wherever the latter is not ~0.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double peak = 0.0;
    for (double phi : x) peak = std::max(peak, reference(phi));
    for (double phi : x) {
      const double ref = reference(phi);
      if (ref < 1e-6 * peak) continue;
      const double ratio = rate(phi) / ref;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    report.checks.push_back(check("proportional_to_closed_form", 0.0, (hi - lo) / hi, 1e-9));
  }
  if (scheme == DeBroglieScheme::kNoonProjection) {
    report.checks.push_back(check("minimum_at_zero_phase", 0.0, rate(0.0) / amplitude, 1e-12));
  }
  return report;
}

}  // namespace experiments
}  // namespace multiphoton
