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

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "multiphoton/errors.hpp"
#include "multiphoton/fit.hpp"
#include "multiphoton/scan_result.hpp"

namespace multiphoton {
namespace {

TEST(Fit, RecoversCosineParameters) {
  std::vector<double> x, y;
  for (int i = 0; i < 60; ++i) {
    const double phi = 2 * std::numbers::pi * i / 60.0;
    x.push_back(phi);
    y.push_back(2.0 + 0.7 * std::cos(3 * phi + 0.4));
  }
  const FitSummary fit = fit_fringe(x, y, 6, 2 * std::numbers::pi);
  EXPECT_EQ(fit.harmonic, 3);
  EXPECT_NEAR(fit.period, 2 * std::numbers::pi / 3, 1e-12);
  EXPECT_NEAR(fit.parameter("offset").value, 2.0, 1e-12);
  EXPECT_NEAR(fit.parameter("amplitude").value, 0.7, 1e-12);
  EXPECT_NEAR(fit.parameter("phase").value, 0.4, 1e-12);
  EXPECT_NEAR(fit.visibility, 0.35, 1e-12);
  EXPECT_LT(fit.max_subharmonic_ratio, 1e-12);
  EXPECT_LT(fit.residual_norm, 1e-12);
  EXPECT_TRUE(std::isfinite(fit.residual_norm));
  EXPECT_THROW(fit.parameter("nope"), std::out_of_range);
}

TEST(Fit, DetectsSubharmonicContent) {
  std::vector<double> x, y;
  for (int i = 0; i < 80; ++i) {
    const double phi = 2 * std::numbers::pi * i / 80.0;
    x.push_back(phi);
    y.push_back(1.0 + std::cos(4 * phi) + 0.01 * std::cos(2 * phi));
  }
  const FitSummary fit = fit_fringe(x, y, 8, 2 * std::numbers::pi);
  EXPECT_EQ(fit.harmonic, 4);
  EXPECT_NEAR(fit.max_subharmonic_ratio, 0.01, 1e-10);
}

TEST(Fit, StandardErrorsScaleWithNoise) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> noise(0.0, 0.05);
  std::vector<double> x, y;
  for (int i = 0; i < 400; ++i) {
    const double phi = 2 * std::numbers::pi * i / 400.0;
    x.push_back(phi);
    y.push_back(1.0 + 0.5 * std::cos(phi) + noise(rng));
  }
  const FitSummary fit = fit_cosine(x, y, 1, 2 * std::numbers::pi);
  const double se = fit.parameter("amplitude").std_error;
  EXPECT_NEAR(se, 0.05 * std::sqrt(2.0 / 400), 0.3 * se);
  EXPECT_NEAR(fit.parameter("amplitude").value, 0.5, 5 * se);
}

TEST(Fit, BinnedFitIsUnbiasedByBinning) {
  // Exact bin integrals of 1 + V cos(2 pi (x - x0)/L) with only 8 bins.
  const double period = 3.0, v = 0.6, x0 = 0.7;
  const int bins = 8;
  std::vector<double> counts;
  const double k = 2 * std::numbers::pi / period;
  for (int i = 0; i < bins; ++i) {
    const double lo = period * i / bins, hi = period * (i + 1) / bins;
    counts.push_back((hi - lo) + v / k * (std::sin(k * (hi - x0)) - std::sin(k * (lo - x0))));
  }
  const FitSummary fit = fit_binned_fringe(counts, period);
  EXPECT_NEAR(fit.visibility, v, 1e-12);
  EXPECT_NEAR(fit.parameter("phase").value, -k * x0, 1e-12);
}

TEST(Fit, RejectsBadInput) {
  const std::vector<double> x{0, 1, 2}, y{0, 1};
  EXPECT_THROW(fit_cosine(x, y, 1, 1.0), InvalidParameter);
  EXPECT_THROW(fit_cosine(x, x, 0, 1.0), InvalidParameter);
  EXPECT_THROW(fit_fringe(x, x, 3, 1.0), InvalidParameter);
}

TEST(ScanResult, RowsStaySorted) {
  ScanResult scan("e", "p", {"a", "b"});
  scan.add_row(2.0, {1, 2});
  scan.add_row(-1.0, {3, 4});
  scan.add_row(0.5, {5, 6});
  EXPECT_EQ(scan.parameters(), (std::vector<double>{-1.0, 0.5, 2.0}));
  EXPECT_EQ(scan.column("b"), (std::vector<double>{4, 6, 2}));
  EXPECT_EQ(scan.value(1, "a"), 5.0);
  EXPECT_THROW(scan.add_row(1.0, {1}), std::invalid_argument);
  EXPECT_THROW(scan.column("c"), std::out_of_range);
  EXPECT_THROW(ScanResult("e", "p", {"a", "a"}), std::invalid_argument);
}

TEST(ScanResult, CsvRoundTripIsExact) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  ScanResult scan("exp", "x", {"y", "z"});
  for (int i = 0; i < 200; ++i) {
    scan.add_row(u(rng), {u(rng) * 1e-200, std::nextafter(u(rng), 0.0)});
  }
  scan.add_row(0.0, {std::numeric_limits<double>::denorm_min(), -0.0});
  scan.add_row(1e300, {std::numeric_limits<double>::max(), 5e-324});
  const ScanResult parsed = parse_csv(to_csv(scan), "exp");
  ASSERT_EQ(parsed.rows().size(), scan.rows().size());
  for (std::size_t i = 0; i < scan.rows().size(); ++i) {
    EXPECT_EQ(parsed.rows()[i].parameter, scan.rows()[i].parameter);
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(std::bit_cast<std::uint64_t>(parsed.rows()[i].values[j]),
                std::bit_cast<std::uint64_t>(scan.rows()[i].values[j]));
    }
  }
  EXPECT_EQ(parsed.observable_names(), scan.observable_names());
  EXPECT_EQ(parsed.parameter_name(), "x");
}

TEST(ScanResult, CsvParserRejectsMalformedRows) {
  EXPECT_THROW(parse_csv("x,y\n1\n", "e"), std::invalid_argument);
  EXPECT_THROW(parse_csv("x,y\n1,abc\n", "e"), std::invalid_argument);
  EXPECT_THROW(parse_csv("", "e"), std::invalid_argument);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-2.5e-10), "-2.5e-10");
}

}  // namespace
}  // namespace multiphoton
