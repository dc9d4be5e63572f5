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

#ifndef TELEAMP_INTERFEROMETER_H_
#define TELEAMP_INTERFEROMETER_H_

#include <cstddef>
#include <span>
#include <vector>

#include "teleamp/fock.h"

namespace teleamp {

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;

  /// Largest entry-wise |A - B|.
  double max_abs_diff(const ComplexMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Unitary describing a passive linear-optical network. A photon entering
/// input port c leaves as sum_r S(r, c) a_r^dagger.
class ScatteringMatrix {
 public:
  /// Throws std::invalid_argument unless max|S^dagger S - I| <= 1e-12.
  explicit ScatteringMatrix(ComplexMatrix entries);

  std::size_t dim() const { return entries_.rows(); }
  Complex operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  const ComplexMatrix& entries() const { return entries_; }

  ScatteringMatrix adjoint() const;

  /// max|S^dagger S - I| entry-wise.
  double unitarity_error() const;

 private:
  ComplexMatrix entries_;
};

inline constexpr double kUnitarityTolerance = 1e-12;

/// omega_size^power with omega_size = exp(-2 pi i / size). The exponent is
/// reduced modulo `size` before evaluating, so omega^4 and omega^1 for
/// size 3 give bit-identical values.
Complex root_of_unity(int size, long long power);

/// Quantum-Fourier-transform splitter: S(j, k) = omega^(j k) / sqrt(size)
/// for 0-based j, k.
ScatteringMatrix qft_splitter(int size);

/// Two-mode beam splitter with transmissivity tau:
/// [[sqrt(1 - tau), sqrt(tau)], [sqrt(tau), -sqrt(1 - tau)]].
/// |1,0> maps to sqrt(1 - tau)|1,0> + sqrt(tau)|0,1>.
ScatteringMatrix beam_splitter(double tau);

/// Ryser's formula with Gray-code subset order, O(2^m m). The permanent of
/// the 0x0 matrix is 1.
Complex permanent(const ComplexMatrix& m);

/// m x m matrix built from `s` by repeating column c input[c] times and
/// row r output[r] times.
ComplexMatrix build_submatrix(const ScatteringMatrix& s,
                              const OccupationVector& input,
                              const OccupationVector& output);

/// <output| S |input> through the permanent of build_submatrix. Returns
/// exactly zero when the photon totals differ.
Complex scattering_amplitude(const ScatteringMatrix& s,
                             const OccupationVector& input,
                             const OccupationVector& output);

/// Fock-space action of `s` on the listed modes of `state`, by multiplying
/// out creation-operator polynomials ket by ket. Other modes are untouched.
PureState apply_unitary(const ScatteringMatrix& s, const PureState& state,
                        std::span<const std::size_t> modes);

/// apply_unitary on all modes of `state`.
PureState apply_unitary(const ScatteringMatrix& s, const PureState& state);

}  // namespace teleamp

#endif  // TELEAMP_INTERFEROMETER_H_
