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

#include "multiphoton/permanent.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "multiphoton/errors.hpp"
#include "multiphoton/tolerances.hpp"

namespace multiphoton {

Complex permanent(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidParameter("permanent needs a square matrix");
  const auto n = static_cast<std::size_t>(m.rows());
  if (n > tol::kMaxPermanentSize) {
    throw ShellOverflow("permanent limited to " +
                        std::to_string(tol::kMaxPermanentSize) + "x" +
                        std::to_string(tol::kMaxPermanentSize));
  }
  if (n == 0) return {1.0, 0.0};

  // perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij, walking
  // the subsets in Gray-code order so each step adds or removes one column.
  std::vector<Complex> row_sums(n, Complex{});
  Complex total{};
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto col = static_cast<Eigen::Index>(std::countr_zero(k));
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    if (gray & bit) {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] += m(static_cast<Eigen::Index>(i), col);
    } else {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] -= m(static_cast<Eigen::Index>(i), col);
    }
    Complex prod = row_sums[0];
    for (std::size_t i = 1; i < n; ++i) prod *= row_sums[i];
    if (std::popcount(gray) % 2 == 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return (n % 2 == 1) ? -total : total;
}

double normalization_constant(const PacketSet& packets) {
  return permanent(packets.gram()).real();
}

}  // namespace multiphoton
