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

#include "teleamp/statesynth.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "teleamp/interferometer.h"

namespace teleamp {

namespace {

// sum_{k=lo}^{hi} g^(2k)
double gain_power_sum(double gain, int lo, int hi) {
  double sum = 0.0;
  for (int k = lo; k <= hi; ++k) sum += std::pow(gain, 2 * k);
  return sum;
}

}  // namespace

PureState controlled_beam_splitter(const PureState& s, const ControlledBSSpec& spec) {
  if (spec.control == spec.target_a || spec.control == spec.target_b ||
      spec.target_a == spec.target_b) {
    throw std::invalid_argument("controlled beam splitter modes must be distinct");
  }
  if (spec.control >= s.modes() || spec.target_a >= s.modes() ||
      spec.target_b >= s.modes()) {
    throw std::out_of_range("mode index out of range");
  }
  const ScatteringMatrix bs = beam_splitter(spec.tau);
  PureState idle(s.modes());
  PureState active(s.modes());
  for (const auto& [occ, amp] : s.amplitudes()) {
    (occ[spec.control] == 0 ? active : idle).accumulate(occ, amp);
  }
  const std::size_t targets[] = {spec.target_a, spec.target_b};
  return add(idle, apply_unitary(bs, active, targets));
}

SynthesisResult synthesize_resource(const GainConfig& cfg) {
  const int n = cfg.size();
  const double g = cfg.gain();
  std::vector<int> counts(2 * n, 0);
  for (int k = 0; k < n; ++k) counts[k] = 1;
  PureState state = PureState::basis(OccupationVector(counts));

  const double tau_first = gain_power_sum(g, 1, n) / gain_power_sum(g, 0, n);
  const std::size_t first_pair[] = {static_cast<std::size_t>(n - 1),
                                    static_cast<std::size_t>(2 * n - 1)};
  state = apply_unitary(beam_splitter(tau_first), state, first_pair);

  // The rightmost factor of the operator product acts first.
  for (int i = n; i >= 2; --i) {
    ControlledBSSpec spec{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 2),
                          static_cast<std::size_t>(n + i - 2),
                          gain_power_sum(g, 1, i - 1) / gain_power_sum(g, 0, i - 1)};
    state = controlled_beam_splitter(state, spec);
  }
  return {std::move(state), std::pow(1.0 / 16.0, n - 1)};
}

PureState shift_modes(const PureState& s) {
  PureState out(s.modes());
  for (const auto& [occ, amp] : s.amplitudes()) {
    std::vector<int> c = occ.counts();
    if (!c.empty()) std::rotate(c.begin(), c.begin() + 1, c.end());
    out.accumulate(OccupationVector(std::move(c)), amp);
  }
  return out;
}

}  // namespace teleamp
