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
#include <functional>
#include <string>

#include "multiphoton/distinguishability.hpp"
#include "multiphoton/errors.hpp"
#include "multiphoton/experiments.hpp"
#include "multiphoton/linear_optics.hpp"

namespace multiphoton::experiments {
namespace {

constexpr double kFarDelay = 40.0;  // in units of 1/bandwidth

}  // namespace

std::string to_string(VisibilityScheme scheme) {
  switch (scheme) {
    case VisibilityScheme::kNoonProjection: return "noon_projection";
    case VisibilityScheme::kAsymmetricSplitter: return "asymmetric_bs";
  }
  throw InvalidParameter("unknown visibility scheme");
}

VisibilityScheme parse_visibility_scheme(std::string_view name) {
  if (name == "noon_projection") return VisibilityScheme::kNoonProjection;
  if (name == "asymmetric_bs") return VisibilityScheme::kAsymmetricSplitter;
  throw InvalidParameter("unknown visibility scheme '" + std::string(name) + "'");
}

ExperimentReport run_visibility_vs_distinguishability(const VisibilityParams& params) {
  const int n = params.photons;
  const int m = params.overlapping;
  const double sigma = params.bandwidth;
  if (n < 1 || n > 4) throw InvalidParameter("photons must lie in 1..4");
  if (m < 0 || m > n) throw InvalidParameter("overlapping must lie in 0..photons");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidParameter("bandwidth must be positive");

  // Photon 0 is the scanned one (H, or the lone photon in port 2). Photons
  // 1..m share its zero-delay packet; the remaining N - m sit far away.
  auto packets_at = [&](double scaled_delay) {
    std::vector<GaussianPacket> packets{{0.0, sigma, scaled_delay / sigma}};
    for (int k = 0; k < n; ++k) {
      packets.push_back({0.0, sigma, k < m ? 0.0 : kFarDelay / sigma});
    }
    return PacketSet(std::move(packets));
  };

  const int total = n + 1;
  std::function<double(const PacketSet&)> rate;
  double classical = 0.0;
  if (params.scheme == VisibilityScheme::kNoonProjection) {
    std::vector<std::size_t> polarization(static_cast<std::size_t>(total), 1);
    polarization[0] = 0;
    rate = [polarization](const PacketSet& packets) {
      return fan_coincidence_with_distinguishability(packets, polarization, {});
    };
    // Each photon independently reaches a given detector with probability
    // 1 / (2 M^2); the M photons can fill the M detectors in M! ways.
    classical = std::tgamma(total + 1.0) * std::pow(1.0 / (2.0 * total * total), total);
  } else {
    const Splitter splitter(static_cast<double>(n) / (n + 1), 0, 1);
    std::vector<std::size_t> ports(static_cast<std::size_t>(total), 0);
    ports[0] = 1;
    const auto pattern = OccupationPattern::exactly({n, 1});
    rate = [splitter, ports, pattern](const PacketSet& packets) {
      const Element bs = splitter;
      return coincidence_with_distinguishability(packets, ports, 2, std::span(&bs, 1), pattern);
    };
    classical = classical_outcome_probability({n, 1}, splitter, {n, 1});
  }

  const double baseline = rate(packets_at(-kFarDelay));
  ExperimentReport report{
      ScanResult("visibility_vs_distinguishability", "scaled_delay",
                 {"rate", "baseline", "normalized_rate"}),
      {},
      {{"photons", n}, {"overlapping", m}, {"bandwidth", sigma}, {"baseline", baseline}},
      std::nullopt, std::nullopt};
  report.scan.set_metadata("scheme", to_string(params.scheme));
  double minimum = rate(packets_at(0.0));
  for (double x : params.delay.values()) {
    const double r = rate(packets_at(x));
    minimum = std::min(minimum, r);
    report.scan.add_row(x, {r, baseline, r / baseline});
  }
  const double visibility = (baseline - minimum) / baseline;
  report.parameters["visibility"] = visibility;
  report.checks.push_back(Check{"visibility", closed_form::distinguishability_visibility(n, m),
                                visibility, 1e-6});
  const double distinguishable =
      rate(DistinguishabilityScenario::all_distinguishable(static_cast<std::size_t>(total))
               .packet_set());
  report.checks.push_back(
      Check{"distinguishable_limit_vs_classical", classical, distinguishable, 1e-8});
  return report;
}

}  // namespace multiphoton::experiments
