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

#ifndef TELEAMP_STATESYNTH_H_
#define TELEAMP_STATESYNTH_H_

#include <cstddef>

#include "teleamp/fock.h"
#include "teleamp/protocol.h"

namespace teleamp {

/// Beam splitter on (target_a, target_b) that fires only when
/// `control` holds zero photons. Indices are 0-based and distinct.
struct ControlledBSSpec {
  std::size_t control;
  std::size_t target_a;
  std::size_t target_b;
  double tau;
};

PureState controlled_beam_splitter(const PureState& s, const ControlledBSSpec& spec);

struct SynthesisResult {
  PureState state;
  /// Post-selection probability of a linear-optics realization of the
  /// n - 1 controlled splitters, 1/16 each. Bookkeeping only: the
  /// simulation applies them as deterministic unitaries.
  double physical_success_probability;
};

/// Builds |g_n> from |1>^n |0>^n: a beam splitter on modes (n, 2n), then
/// controlled splitters C_i S_{i-1, n+i-1} for i = n down to 2 (1-based
/// mode numbers), with
///   tau_i = sum_{k=1}^{i-1} g^2k / sum_{k=0}^{i-1} g^2k.
SynthesisResult synthesize_resource(const GainConfig& cfg);

/// Cyclic mode shift P|a_1, a_2, ..., a_M> = |a_2, ..., a_M, a_1>.
PureState shift_modes(const PureState& s);

}  // namespace teleamp

#endif  // TELEAMP_STATESYNTH_H_
