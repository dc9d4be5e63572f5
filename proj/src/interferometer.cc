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

#include "teleamp/interferometer.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>

namespace teleamp {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  ComplexMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Complex a = (*this)(r, k);
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  }
  return worst;
}

ScatteringMatrix::ScatteringMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.square() || entries_.rows() == 0) {
    throw std::invalid_argument("scattering matrix must be square and non-empty");
  }
  double err = unitarity_error();
  if (!(err <= kUnitarityTolerance)) {
    throw std::invalid_argument("scattering matrix is not unitary");
  }
}

ScatteringMatrix ScatteringMatrix::adjoint() const {
  return ScatteringMatrix(entries_.adjoint());
}

double ScatteringMatrix::unitarity_error() const {
  return (entries_.adjoint() * entries_).max_abs_diff(ComplexMatrix::identity(dim()));
}

Complex root_of_unity(int size, long long power) {
  if (size <= 0) throw std::invalid_argument("root of unity order must be positive");
  long long reduced = power % size;
  if (reduced < 0) reduced += size;
  if (reduced == 0) return {1.0, 0.0};
  double angle = -2.0 * std::numbers::pi * static_cast<double>(reduced) / size;
  return std::polar(1.0, angle);
}

ScatteringMatrix qft_splitter(int size) {
  if (size < 1) throw std::invalid_argument("splitter size must be at least 1");
  ComplexMatrix m(size, size);
  double scale = 1.0 / std::sqrt(static_cast<double>(size));
  for (int j = 0; j < size; ++j) {
    for (int k = 0; k < size; ++k) {
      m(j, k) = scale * root_of_unity(size, static_cast<long long>(j) * k);
    }
  }
  return ScatteringMatrix(std::move(m));
}

ScatteringMatrix beam_splitter(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("beam splitter transmissivity must lie in [0, 1]");
  }
  double t = std::sqrt(tau);
  double r = std::sqrt(1.0 - tau);
  return ScatteringMatrix(ComplexMatrix(2, 2, {r, t, t, -r}));
}

Complex permanent(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("permanent of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {1.0, 0.0};
  if (n >= 63) throw std::invalid_argument("matrix too large for exact permanent");

  // Row sums over the current column subset, updated one column at a time
  // in Gray-code order.
  std::vector<Complex> row_sums(n, Complex(0.0, 0.0));
  Complex total(0.0, 0.0);
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    const double dir = (gray & bit) ? 1.0 : -1.0;
    Complex prod(1.0, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      row_sums[r] += dir * m(r, col);
      prod *= row_sums[r];
    }
    total += (std::popcount(gray) & 1) ? -prod : prod;
  }
  return (n & 1) ? -total : total;
}

ComplexMatrix build_submatrix(const ScatteringMatrix& s,
                              const OccupationVector& input,
                              const OccupationVector& output) {
  if (input.size() != s.dim() || output.size() != s.dim()) {
    throw std::invalid_argument("occupation length does not match splitter dimension");
  }
  const int photons = input.total_photons();
  if (output.total_photons() != photons) {
    throw std::invalid_argument("input and output photon totals differ");
  }
  std::vector<std::size_t> cols, rows;
  for (std::size_t c = 0; c < s.dim(); ++c) cols.insert(cols.end(), input[c], c);
  for (std::size_t r = 0; r < s.dim(); ++r) rows.insert(rows.end(), output[r], r);
  ComplexMatrix sub(photons, photons);
  for (int i = 0; i < photons; ++i) {
    for (int j = 0; j < photons; ++j) sub(i, j) = s(rows[i], cols[j]);
  }
  return sub;
}

namespace {

double factorial_product(const OccupationVector& occ) {
  double prod = 1.0;
  for (int c : occ.counts()) {
    for (int k = 2; k <= c; ++k) prod *= k;
  }
  return prod;
}

// Expands prod_c (sum_r S(r, c) a_r^dagger)^input[c] / sqrt(input[c]!) into
// Fock amplitudes over the output modes.
std::map<OccupationVector, Complex> expand_ket(const ScatteringMatrix& s,
                                              const OccupationVector& input) {
  const std::size_t dim = s.dim();
  // Coefficients of creation-operator monomials.
  std::map<std::vector<int>, Complex> poly{{std::vector<int>(dim, 0), Complex(1.0, 0.0)}};
  for (std::size_t c = 0; c < dim; ++c) {
    for (int photon = 0; photon < input[c]; ++photon) {
      std::map<std::vector<int>, Complex> next;
      for (const auto& [mono, coef] : poly) {
        for (std::size_t r = 0; r < dim; ++r) {
          Complex entry = s(r, c);
          if (entry == Complex(0.0, 0.0)) continue;
          std::vector<int> key = mono;
          ++key[r];
          next[std::move(key)] += coef * entry;
        }
      }
      poly = std::move(next);
    }
  }
  const double in_norm = std::sqrt(factorial_product(input));
  std::map<OccupationVector, Complex> out;
  for (auto& [mono, coef] : poly) {
    OccupationVector occ(mono);
    out.emplace(occ, coef * std::sqrt(factorial_product(occ)) / in_norm);
  }
  return out;
}

}  // namespace

Complex scattering_amplitude(const ScatteringMatrix& s,
                             const OccupationVector& input,
                             const OccupationVector& output) {
  if (input.size() != s.dim() || output.size() != s.dim()) {
    throw std::invalid_argument("occupation length does not match splitter dimension");
  }
  if (input.total_photons() != output.total_photons()) return {0.0, 0.0};
  Complex per = permanent(build_submatrix(s, input, output));
  return per / std::sqrt(factorial_product(input) * factorial_product(output));
}

PureState apply_unitary(const ScatteringMatrix& s, const PureState& state,
                        std::span<const std::size_t> modes) {
  if (modes.size() != s.dim()) {
    throw std::invalid_argument("mode list does not match splitter dimension");
  }
  std::vector<bool> seen(state.modes(), false);
  for (std::size_t m : modes) {
    if (m >= state.modes()) throw std::out_of_range("mode index out of range");
    if (seen[m]) throw std::invalid_argument("duplicate mode index");
    seen[m] = true;
  }

  std::map<OccupationVector, std::map<OccupationVector, Complex>> cache;
  PureState out(state.modes());
  for (const auto& [occ, amp] : state.amplitudes()) {
    OccupationVector local = occ.select(modes);
    auto it = cache.find(local);
    if (it == cache.end()) it = cache.emplace(local, expand_ket(s, local)).first;
    std::vector<int> counts = occ.counts();
    for (const auto& [mapped, coef] : it->second) {
      for (std::size_t i = 0; i < modes.size(); ++i) counts[modes[i]] = mapped[i];
      out.accumulate(OccupationVector(counts), amp * coef);
    }
  }
  out.prune();
  return out;
}

PureState apply_unitary(const ScatteringMatrix& s, const PureState& state) {
  std::vector<std::size_t> all(state.modes());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return apply_unitary(s, state, all);
}

}  // namespace teleamp
