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

#include "registry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "config.hpp"

namespace multiphoton::cli {



ParamReader::ParamReader(std::map<std::string, std::string> values)
    : values_(std::move(values)) {}

std::optional<std::string> ParamReader::take(const std::string& key) {
  used_.insert(key);
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

namespace {

double to_real(const std::string& key, const std::string& text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end || !std::isfinite(value)) {
    throw UsageError("parameter " + key + ": '" + text + "' is not a finite number");
  }
  return value;
}

}  // namespace

double ParamReader::real(const std::string& key, double fallback) {
  const auto text = take(key);
  const double value = text ? to_real(key, *text) : fallback;
  effective_[key] = value;
  return value;
}

int ParamReader::integer(const std::string& key, int fallback) {
  const auto text = take(key);
  int value = fallback;
  if (text) {
    const auto* end = text->data() + text->size();
    const auto result = std::from_chars(text->data(), end, value);
    if (result.ec != std::errc() || result.ptr != end) {
      throw UsageError("parameter " + key + ": '" + *text + "' is not an integer");
    }
  }
  effective_[key] = value;
  return value;
}

std::string ParamReader::text(const std::string& key, const std::string& fallback) {
  const auto text = take(key);
  std::string value = text ? *text : fallback;
  effective_[key] = value;
  return value;
}

std::vector<double> ParamReader::real_list(const std::string& key,
                                           const std::vector<double>& fallback) {
  const auto text = take(key);
  std::vector<double> value = fallback;
  if (text) {
    value.clear();
    std::stringstream stream(*text);
    std::string item;
    while (std::getline(stream, item, ',')) value.push_back(to_real(key, item));
  }
  effective_[key] = value;
  return value;
}

void ParamReader::finish() const {
  for (const auto& [key, value] : values_) {
    if (!used_.contains(key)) throw UsageError("unknown parameter '" + key + "'");
  }
}

namespace {

std::string fmt(double v) { return format_double(v); }

std::vector<ExperimentEntry> build_registry() {
  namespace ex = experiments;
  std::vector<ExperimentEntry> entries;

  {
    const ex::BunchingParams d;
    entries.push_back({"bunching", "Eq. 13-15/40",
                       "same-port bunching ratios for one and two photon pairs vs pair delay",
                       {{"bandwidth", "real", fmt(d.bandwidth)}},
                       "pair_delay", d.pair_delay,
                       [](RunInputs& in) {
                         ex::BunchingParams p;
                         p.bandwidth = in.params.real("bandwidth", p.bandwidth);
                         if (in.scan) p.pair_delay = *in.scan;
                         return ex::run_bunching(p);
                       }});
  }
  {
    const ex::DeBroglieParams d;
    entries.push_back(
        {"de_broglie_projection", "Eq. 29-33",
         "N-photon fringes from projection measurements",
         {{"scheme", "text", "three_photon_WK|four_photon_asym|four_photon_symmetric|noon_projection"},
          {"photons", "integer", std::to_string(d.photons)},
          {"root", "text", "upper|lower"}},
         "phase", d.phase,
         [](RunInputs& in) {
           ex::DeBroglieParams p;
           p.scheme = ex::parse_de_broglie_scheme(
               in.params.text("scheme", ex::to_string(p.scheme)));
           p.photons = in.params.integer("photons", p.photons);
           const std::string root = in.params.text("root", "upper");
           if (root != "upper" && root != "lower") {
             throw UsageError("parameter root must be upper or lower");
           }
           p.upper_root = root == "upper";
           if (in.scan) p.phase = *in.scan;
           return ex::run_de_broglie_projection(p);
         }});
  }
  {
    const ex::FockFilterParams d;
    std::string coeffs;
    for (std::size_t i = 0; i < d.input_coefficients.size(); ++i) {
      coeffs += (i ? "," : "") + fmt(d.input_coefficients[i].real());
    }
    entries.push_back({"fock_filter", "Eq. 19/20",
                       "removes one Fock component with a single-photon ancilla",
                       {{"coefficients", "list", coeffs},
                        {"transmissivity", "real", fmt(d.transmissivity)}},
                       "", {},
                       [](RunInputs& in) {
                         ex::FockFilterParams p;
                         std::vector<double> defaults;
                         for (const auto& c : p.input_coefficients) defaults.push_back(c.real());
                         const auto coeffs = in.params.real_list("coefficients", defaults);
                         p.input_coefficients.assign(coeffs.begin(), coeffs.end());
                         p.transmissivity = in.params.real("transmissivity", p.transmissivity);
                         return ex::run_fock_filter(p);
                       }});
  }
  {
    const ex::FringeMonteCarloParams d;
    entries.push_back(
        {"fringe_montecarlo", "Eq. 55-57",
         "single-realization fringes and the degree of coherence (uses --seed)",
         {{"photons_first", "integer", std::to_string(d.photons_first)},
          {"photons_second", "integer", std::to_string(d.photons_second)},
          {"indist_first", "integer", std::to_string(d.indist_first)},
          {"indist_second", "integer", std::to_string(d.indist_second)},
          {"samples", "integer", std::to_string(d.samples)},
          {"realizations", "integer", std::to_string(d.realizations)},
          {"bins", "integer", std::to_string(d.bins)},
          {"fringe_spacing", "real", fmt(d.fringe_spacing)}},
         "", {},
         [](RunInputs& in) {
           ex::FringeMonteCarloParams p;
           p.photons_first = in.params.integer("photons_first", p.photons_first);
           p.photons_second = in.params.integer("photons_second", p.photons_second);
           p.indist_first = in.params.integer("indist_first", p.indist_first);
           p.indist_second = in.params.integer("indist_second", p.indist_second);
           p.samples = in.params.integer("samples", p.samples);
           p.realizations = in.params.integer("realizations", p.realizations);
           p.bins = in.params.integer("bins", p.bins);
           p.fringe_spacing = in.params.real("fringe_spacing", p.fringe_spacing);
           p.seed = in.seed;
           return ex::run_fringe_montecarlo(p);
         }});
  }
  {
    const ex::HomDipParams d;
    entries.push_back({"hom_dip", "Eq. 11/12",
                       "two-photon coincidence vs delay (scan in units of 1/bandwidth)",
                       {{"transmissivity", "real", fmt(d.transmissivity)},
                        {"bandwidth", "real", fmt(d.bandwidth)}},
                       "delay", d.delay,
                       [](RunInputs& in) {
                         ex::HomDipParams p;
                         p.transmissivity = in.params.real("transmissivity", p.transmissivity);
                         p.bandwidth = in.params.real("bandwidth", p.bandwidth);
                         if (in.scan) p.delay = *in.scan;
                         return ex::run_hom_dip(p);
                       }});
  }
  {
    const ex::NoonFringeParams d;
    entries.push_back({"noon_fringe", "Eq. 22/23", "N-photon NOON fringe and cosine fit",
                       {{"photons", "integer", std::to_string(d.photons)}},
                       "phase", d.phase,
                       [](RunInputs& in) {
                         ex::NoonFringeParams p;
                         p.photons = in.params.integer("photons", p.photons);
                         if (in.scan) p.phase = *in.scan;
                         return ex::run_noon_fringe(p);
                       }});
  }
  {
    const ex::PfleegorMandelParams d;
    entries.push_back({"pfleegor_mandel", "Eq. 1.3/1.4",
                       "two-laser intensity correlation from the four-path sum",
                       {{"fringe_spacing", "real", fmt(d.fringe_spacing)}},
                       "separation", d.separation,
                       [](RunInputs& in) {
                         ex::PfleegorMandelParams p;
                         p.fringe_spacing = in.params.real("fringe_spacing", p.fringe_spacing);
                         if (in.scan) p.separation = *in.scan;
                         return ex::run_pfleegor_mandel(p);
                       }});
  }
  {
    const ex::StimulatedEmissionParams d;
    entries.push_back({"stimulated_emission", "Eq. 16",
                       "(N+1)-fold enhancement of |N,1> into one port",
                       {{"max_photons", "integer", std::to_string(d.max_photons)}},
                       "", {},
                       [](RunInputs& in) {
                         ex::StimulatedEmissionParams p;
                         p.max_photons = in.params.integer("max_photons", p.max_photons);
                         return ex::run_stimulated_emission(p);
                       }});
  }
  {
    const ex::ThreePhotonNoonParams d;
    entries.push_back(
        {"three_photon_noon_generation", "Eq. 25",
         "coherent plus two-photon mixing; eta defaults to alpha^2/sqrt(2)",
         {{"alpha_re", "real", fmt(d.alpha.real())},
          {"alpha_im", "real", fmt(d.alpha.imag())},
          {"eta_re", "real", "Re(alpha^2)/sqrt2"},
          {"eta_im", "real", "Im(alpha^2)/sqrt2"}},
         "", {},
         [](RunInputs& in) {
           ex::ThreePhotonNoonParams p;
           const double are = in.params.real("alpha_re", p.alpha.real());
           const double aim = in.params.real("alpha_im", p.alpha.imag());
           p.alpha = {are, aim};
           const Complex balanced = p.alpha * p.alpha / std::sqrt(2.0);
           p.eta = {in.params.real("eta_re", balanced.real()),
                    in.params.real("eta_im", balanced.imag())};
           return ex::run_three_photon_noon_generation(p);
         }});
  }
  {
    const ex::NullScanParams d;
    entries.push_back({"two_pair_null", "Eq. 21", "P(2,2) of |2,2> vs transmissivity",
                       {}, "transmissivity", d.transmissivity,
                       [](RunInputs& in) {
                         ex::NullScanParams p;
                         if (in.scan) p.transmissivity = *in.scan;
                         return ex::run_two_pair_null(p);
                       }});
  }
  {
    const ex::VisibilityParams d;
    entries.push_back(
        {"visibility_vs_distinguishability", "Eq. 53/54",
         "dip visibility m/N with m of N photons overlapping the scanned one",
         {{"scheme", "text", "noon_projection|asymmetric_bs"},
          {"photons", "integer", std::to_string(d.photons)},
          {"overlapping", "integer", std::to_string(d.overlapping)},
          {"bandwidth", "real", fmt(d.bandwidth)}},
         "delay", d.delay,
         [](RunInputs& in) {
           ex::VisibilityParams p;
           p.scheme = ex::parse_visibility_scheme(
               in.params.text("scheme", ex::to_string(p.scheme)));
           p.photons = in.params.integer("photons", p.photons);
           p.overlapping = in.params.integer("overlapping", p.overlapping);
           p.bandwidth = in.params.real("bandwidth", p.bandwidth);
           if (in.scan) p.delay = *in.scan;
           return ex::run_visibility_vs_distinguishability(p);
         }});
  }
  {
    const ex::NullScanParams d;
    entries.push_back({"wang_kobayashi_null", "Eq. 17/18", "P(2,1) of |2,1> vs transmissivity",
                       {}, "transmissivity", d.transmissivity,
                       [](RunInputs& in) {
                         ex::NullScanParams p;
                         if (in.scan) p.transmissivity = *in.scan;
                         return ex::run_wang_kobayashi_null(p);
                       }});
  }

  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  return entries;
}

}  // namespace

const std::vector<ExperimentEntry>& registry() {
  static const std::vector<ExperimentEntry> entries = build_registry();
  return entries;
}

const ExperimentEntry* find_experiment(std::string_view name) {
  for (const auto& entry : registry()) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

std::string list_experiments() {
  std::size_t width = 0;
  for (const auto& e : registry()) width = std::max(width, e.name.size());
  std::ostringstream out;
  for (const auto& e : registry()) {
    out << e.name << std::string(width - e.name.size() + 2, ' ') << '[' << e.anchor << "]  ";
    bool first = true;
    for (const auto& p : e.params) {
      out << (first ? "" : " ") << p.name << ':' << p.kind << '=' << p.default_value;
      first = false;
    }
    if (!e.scan_parameter.empty()) {
      out << (first ? "" : " ") << "scan=" << e.scan_parameter << ':'
          << format_double(e.default_scan.start) << ':' << format_double(e.default_scan.stop)
          << ':' << e.default_scan.steps;
    }
    out << "  # " << e.summary << '\n';
  }
  return out.str();
}

}  // namespace multiphoton::cli
