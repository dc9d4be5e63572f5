// Copyright 2026 The Teleamp Authors
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

#include "teleamp/oracles.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace teleamp::oracles {

Complex naive_permanent(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Complex sum(0.0, 0.0);
  do {
    Complex prod(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) prod *= m(i, perm[i]);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = Complex(u(rng), u(rng));
  }
  return m;
}

PureState random_qubit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 0.95);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  const double c0sq = u(rng);
  return PureState::single_mode({std::polar(std::sqrt(c0sq), phase(rng)),
                                 std::polar(std::sqrt(1.0 - c0sq), phase(rng))});
}

PureState random_state(std::mt19937_64& rng, std::size_t modes, int max_photons,
                       int terms) {
  std::uniform_int_distribution<int> count(0, max_photons);
  std::normal_distribution<double> gauss;
  PureState s(modes);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> occ(modes);
    for (int& c : occ) c = count(rng);
    s.accumulate(OccupationVector(std::move(occ)), Complex(gauss(rng), gauss(rng)));
  }
  s.prune();
  return normalize(s).state;
}

ScatteringMatrix random_unitary(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> gauss;
  std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
  for (auto& col : cols) {
    for (Complex& z : col) z = Complex(gauss(rng), gauss(rng));
  }
  // Modified Gram-Schmidt; run twice for orthogonality at machine precision.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        Complex proj(0.0, 0.0);
        for (std::size_t i = 0; i < dim; ++i) proj += std::conj(cols[j][i]) * cols[k][i];
        for (std::size_t i = 0; i < dim; ++i) cols[k][i] -= proj * cols[j][i];
      }
      double norm = 0.0;
      for (const Complex& z : cols[k]) norm += std::norm(z);
      norm = std::sqrt(norm);
      for (Complex& z : cols[k]) z /= norm;
    }
  }
  ComplexMatrix m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = cols[c][r];
  }
  return ScatteringMatrix(std::move(m));
}

}  // namespace teleamp::oracles
