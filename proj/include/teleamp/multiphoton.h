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

#ifndef TELEAMP_MULTIPHOTON_H_
#define TELEAMP_MULTIPHOTON_H_

#include <map>
#include <optional>

#include "teleamp/fock.h"
#include "teleamp/protocol.h"

namespace teleamp {

/// Success-branch Kraus operator of one teleamplifier rail, restricted to
/// the rail qubit: |0> -> vacuum_amplitude |0>, |1> -> photon_amplitude |1>.
/// Rail components with two or more photons are annihilated.
struct RailMap {
  double vacuum_amplitude;
  double photon_amplitude;
};

/// Extracts the rail map by enumerating run_protocol on |0> and |1>.
RailMap rail_map_from_protocol(const GainConfig& cfg);

/// n -> infinity rail map, from the asymptotic success probability.
RailMap rail_map_asymptotic(double gain);

struct MultiRailConfig {
  int rails = 1;
  double gain = 1.0;
  /// Teleamplifier size per rail; empty selects the n -> infinity map.
  std::optional<int> size;
  /// Largest photon number the input may carry.
  int input_cutoff = 1;
};

struct MultiphotonResult {
  /// Normalized single-mode output, heralded on every rail succeeding and
  /// on vacuum in rails 2..r after recombination.
  PureState output;
  double probability;
  /// Vacuum-input success probability, the worst case for g >= 1.
  double worst_case_probability;
  /// d_j = out_j / (g^j c_j) relative to the lowest supported j (j = 0
  /// whenever the input has a vacuum component), for every j with c_j != 0.
  std::map<int, Complex> distortions;
};

RailMap rail_map(const MultiRailConfig& mc);

/// Splits the input over `rails` modes with the QFT splitter, applies the
/// rail map on every rail, recombines with the inverse splitter and
/// post-selects vacuum on the discard rails.
MultiphotonResult multiphoton_amplify(const PureState& input, const MultiRailConfig& mc);

/// Same, with an explicit rail map.
MultiphotonResult multiphoton_amplify(const PureState& input, const MultiRailConfig& mc,
                                      const RailMap& map);

}  // namespace teleamp

#endif  // TELEAMP_MULTIPHOTON_H_
