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

#include "teleamp/multiphoton.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "teleamp/interferometer.h"

namespace teleamp {

namespace {

double success_total(const PureState& input, const GainConfig& cfg) {
  double p = 0.0;
  for (const OutcomeRecord& rec : run_protocol(input, cfg)) {
    if (rec.classification == OutcomeClass::kSuccess) p += rec.probability;
  }
  return p;
}

}  // namespace

RailMap rail_map_from_protocol(const GainConfig& cfg) {
  const PureState vac = PureState::single_mode({1.0});
  const PureState one = PureState::single_mode({0.0, 1.0});
  return {std::sqrt(success_total(vac, cfg)), std::sqrt(success_total(one, cfg))};
}

RailMap rail_map_asymptotic(double gain) {
  return {std::sqrt(asymptotic_probability(gain, 1.0)),
          std::sqrt(asymptotic_probability(gain, 0.0))};
}

RailMap rail_map(const MultiRailConfig& mc) {
  if (mc.size) return rail_map_from_protocol(GainConfig(mc.gain, *mc.size));
  return rail_map_asymptotic(mc.gain);
}

MultiphotonResult multiphoton_amplify(const PureState& input, const MultiRailConfig& mc) {
  return multiphoton_amplify(input, mc, rail_map(mc));
}

MultiphotonResult multiphoton_amplify(const PureState& input, const MultiRailConfig& mc,
                                      const RailMap& map) {
  if (mc.rails < 1) throw std::invalid_argument("rail count must be at least 1");
  if (!(mc.gain > 0.0)) throw std::invalid_argument("gain must be positive");
  if (input.modes() != 1) throw std::invalid_argument("input must be a single-mode state");
  if (input.max_photons() > mc.input_cutoff) {
    throw std::invalid_argument("input support exceeds the photon cutoff");
  }
  if (std::abs(input.norm2() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("input state is not normalized");
  }
  const std::size_t r = static_cast<std::size_t>(mc.rails);

  const ScatteringMatrix splitter = qft_splitter(mc.rails);
  PureState spread = apply_unitary(splitter, tensor(input, PureState::vacuum(r - 1)));

  PureState railed(r);
  for (const auto& [occ, amp] : spread.amplitudes()) {
    Complex factor(1.0, 0.0);
    bool truncated = false;
    for (std::size_t k = 0; k < r && !truncated; ++k) {
      if (occ[k] > 1) truncated = true;
      factor *= occ[k] == 0 ? map.vacuum_amplitude : map.photon_amplitude;
    }
    if (!truncated) railed.accumulate(occ, amp * factor);
  }
  railed.prune();

  PureState recombined = apply_unitary(splitter.adjoint(), railed);
  std::vector<std::size_t> discard(r - 1);
  std::iota(discard.begin(), discard.end(), std::size_t{1});
  PureState heralded = project_modes(recombined, OccupationVector::vacuum(r - 1), discard);

  MultiphotonResult result{PureState(1), heralded.norm2(),
                           std::pow(map.vacuum_amplitude, 2.0 * mc.rails), {}};
  if (heralded.empty()) return result;
  result.output = normalize(heralded).state;

  std::optional<Complex> reference;
  for (const auto& [occ, c] : input.amplitudes()) {
    const int j = occ[0];
    Complex raw = heralded.amplitude(occ) / (std::pow(mc.gain, j) * c);
    if (!reference) reference = raw;
    result.distortions.emplace(j, raw / *reference);
  }
  return result;
}

}  // namespace teleamp
