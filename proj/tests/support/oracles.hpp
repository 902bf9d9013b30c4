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

// Reference implementations used only by the tests. They are deliberately
// naive and share no code with the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Sum over all n! permutations.
inline Complex permanent(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex total = 0.0;
  do {
    Complex term = 1.0;
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? Complex(1.0) : total;
}

inline double factorial(int n) { return std::tgamma(n + 1.0); }

/// Two-mode splitter as a single-particle unitary acting on creation
/// operators: a_j^dag -> sum_k U(j, k) b_k^dag.
inline Matrix splitter_unitary(double t) {
  const double st = std::sqrt(t);
  const double sr = std::sqrt(1.0 - t);
  Matrix u(2, 2);
  u << st, sr, -sr, st;
  return u;
}

/// <out| U |in> for Fock states through a linear network with
/// single-particle unitary U: perm(U[in rows, out cols]) / sqrt(prod n! m!).
inline Complex transition_amplitude(const Matrix& u, const std::vector<int>& in,
                                    const std::vector<int>& out) {
  std::vector<int> rows, cols;
  for (std::size_t j = 0; j < in.size(); ++j) rows.insert(rows.end(), in[j], static_cast<int>(j));
  for (std::size_t k = 0; k < out.size(); ++k) cols.insert(cols.end(), out[k], static_cast<int>(k));
  if (rows.size() != cols.size()) return 0.0;
  Matrix sub(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) sub(a, b) = u(rows[a], cols[b]);
  }
  double norm = 1.0;
  for (int n : in) norm *= factorial(n);
  for (int n : out) norm *= factorial(n);
  return permanent(sub) / std::sqrt(norm);
}

/// Independent distinguishable particles: each photon leaves input j for
/// output k with probability |U(j, k)|^2, so the bucket probability is
/// perm(|U|^2[in rows, out cols]) / prod m!.
inline double classical_probability(const Matrix& u, const std::vector<int>& in,
                                    const std::vector<int>& out) {
  std::vector<int> rows, cols;
  for (std::size_t j = 0; j < in.size(); ++j) rows.insert(rows.end(), in[j], static_cast<int>(j));
  for (std::size_t k = 0; k < out.size(); ++k) cols.insert(cols.end(), out[k], static_cast<int>(k));
  if (rows.size() != cols.size()) return 0.0;
  Matrix sub(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) sub(a, b) = std::norm(u(rows[a], cols[b]));
  }
  double norm = 1.0;
  for (int n : out) norm *= factorial(n);
  return permanent(sub).real() / norm;
}

/// Adaptive Gauss-Kronrod on the real line.
inline double integrate(const std::function<double(double)>& f, double lo, double hi) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-13);
}

inline Matrix random_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return m;
}

/// Random Gram matrix of `n` unit vectors in C^dim.
inline Matrix random_gram(std::mt19937_64& rng, int n, int dim) {
  std::normal_distribution<double> g;
  Matrix v(dim, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < dim; ++i) v(i, j) = Complex(g(rng), g(rng));
    v.col(j).normalize();
  }
  Matrix gram = v.adjoint() * v;
  for (int i = 0; i < n; ++i) gram(i, i) = 1.0;
  return gram;
}

}  // namespace oracle
