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

#ifndef TELEAMP_FOCK_H_
#define TELEAMP_FOCK_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace teleamp {

using Complex = std::complex<double>;

/// Amplitudes with magnitude below this are dropped after every linear
/// combination step.
inline constexpr double kPruneThreshold = 1e-14;

/// Tolerance used for "is normalized" checks on states and ensembles.
inline constexpr double kNormTolerance = 1e-12;

/// Photon count per mode; the Fock basis label.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> counts);
  OccupationVector(std::initializer_list<int> counts);

  /// `modes` modes, all empty.
  static OccupationVector vacuum(std::size_t modes);

  std::size_t size() const { return counts_.size(); }
  int operator[](std::size_t mode) const { return counts_[mode]; }
  const std::vector<int>& counts() const { return counts_; }
  int total_photons() const;

  /// Copy with `mode` holding `count` photons.
  OccupationVector with(std::size_t mode, int count) const;

  OccupationVector concat(const OccupationVector& other) const;
  OccupationVector select(std::span<const std::size_t> modes) const;

  /// "1-0-2" style label, used in tables and error messages.
  std::string label() const;

  auto operator<=>(const OccupationVector&) const = default;
  bool operator==(const OccupationVector&) const = default;

 private:
  std::vector<int> counts_;
};

/// All weak compositions of `total` into `parts` non-negative counts,
/// in lexicographic order. There are C(total + parts - 1, parts - 1).
std::vector<OccupationVector> weak_compositions(int total, std::size_t parts);

/// Sparse ket over a fixed number of modes. Amplitudes live in an ordered
/// map so iteration order is deterministic.
class PureState {
 public:
  using AmplitudeMap = std::map<OccupationVector, Complex>;

  explicit PureState(std::size_t modes);
  PureState(std::size_t modes, AmplitudeMap amplitudes);

  static PureState vacuum(std::size_t modes);
  static PureState basis(const OccupationVector& occupation);
  /// Single-mode state sum_j amplitudes[j] |j>.
  static PureState single_mode(std::span<const Complex> amplitudes);
  static PureState single_mode(std::initializer_list<Complex> amplitudes);

  std::size_t modes() const { return modes_; }
  const AmplitudeMap& amplitudes() const { return amplitudes_; }
  bool empty() const { return amplitudes_.empty(); }
  std::size_t term_count() const { return amplitudes_.size(); }

  Complex amplitude(const OccupationVector& occupation) const;
  double norm2() const;
  int max_photons() const;

  /// Accumulates `value` onto the amplitude of `occupation` without pruning.
  /// Call prune() when the linear combination is complete.
  void accumulate(const OccupationVector& occupation, Complex value);
  void prune(double threshold = kPruneThreshold);

  PureState scaled(Complex factor) const;

 private:
  std::size_t modes_;
  AmplitudeMap amplitudes_;
};

/// A single entry of a Kraus-branch ensemble.
struct Branch {
  double weight;
  PureState state;
};

/// Convex mixture of normalized pure states sharing one mode count.
class MixedState {
 public:
  explicit MixedState(std::vector<Branch> branches);
  /// One branch of weight 1; `state` must be normalized.
  explicit MixedState(PureState state);

  /// Builds an ensemble from unnormalized components; each component's
  /// norm2 becomes its weight. Zero components are dropped. The weights
  /// must already sum to 1.
  static MixedState from_components(std::vector<PureState> components);

  std::size_t modes() const { return modes_; }
  const std::vector<Branch>& branches() const { return branches_; }
  double total_weight() const;

 private:
  std::size_t modes_;
  std::vector<Branch> branches_;
};

PureState tensor(const PureState& a, const PureState& b);

/// a + b over the same modes.
PureState add(const PureState& a, const PureState& b);

/// <a|b>
Complex inner_product(const PureState& a, const PureState& b);

/// Projects `modes` onto `pattern` and returns the unnormalized state on the
/// remaining modes (original order). Its norm2 is the outcome probability.
PureState project_modes(const PureState& s, const OccupationVector& pattern,
                        std::span<const std::size_t> modes);

/// Groups the kets of `s` by their occupation on `modes`: the result maps
/// every pattern with nonzero weight to the unnormalized residual state on
/// the remaining modes. Equivalent to calling project_modes for each pattern.
std::map<OccupationVector, PureState> split_by_pattern(
    const PureState& s, std::span<const std::size_t> modes);

/// Partial trace onto `keep`: returns unnormalized pure components phi_k
/// with rho_keep = sum_k |phi_k><phi_k|, one per configuration of the traced
/// modes, in lexicographic order of that configuration.
std::vector<PureState> reduce_to_modes(const PureState& s,
                                       std::span<const std::size_t> keep);

/// |<a|b>|^2 for normalized a, b.
double fidelity_pure(const PureState& a, const PureState& b);

/// sum_i w_i |<target|phi_i>|^2
double fidelity_mixed(const MixedState& rho, const PureState& target);

struct Normalized {
  PureState state;
  double norm2;
};

Normalized normalize(const PureState& s);

/// Multiplies the amplitude of every ket by phase^(photons in `mode`).
PureState apply_number_phase(const PureState& s, std::size_t mode,
                             Complex phase);

}  // namespace teleamp

#endif  // TELEAMP_FOCK_H_
