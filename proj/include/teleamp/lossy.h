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

#ifndef TELEAMP_LOSSY_H_
#define TELEAMP_LOSSY_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "teleamp/fock.h"
#include "teleamp/protocol.h"

namespace teleamp {

struct LossLocations {
  bool before_detectors = true;
  bool resource_modes = true;
};

/// Pure loss with transmissivity eta in (0, 1].
class LossSpec {
 public:
  explicit LossSpec(double eta, LossLocations locations = {});

  double eta() const { return eta_; }
  const LossLocations& locations() const { return locations_; }

 private:
  double eta_;
  LossLocations locations_;
};

/// Kraus images E_k|s> of single-mode pure loss on `mode`, unnormalized,
/// k = 0..max photons. E_k|n> = sqrt(C(n,k) eta^(n-k) (1-eta)^k) |n-k>.
/// Zero images are dropped, so sum_k norm2 = norm2(s).
std::vector<PureState> loss_kraus_images(const PureState& s, double eta,
                                         std::size_t mode);

MixedState loss_channel(const PureState& s, double eta, std::size_t mode);
MixedState loss_channel(const MixedState& rho, double eta, std::size_t mode);

/// |alpha> truncated to {|0>, |1>} and renormalized: (|0> + alpha|1>) / norm.
PureState coherent_qubit(Complex alpha);

/// Coherent state amplitudes e^(-|a|^2/2) a^j / sqrt(j!), cut where the
/// remaining tail is below 1e-16. Not renormalized.
PureState coherent_state(Complex alpha);

/// Fidelity of the ideal amplified truncated qubit against |g alpha>: the
/// ceiling set by the single-photon cutoff.
double cutoff_ceiling(Complex alpha, double gain);

enum class DetectionClass { kSinglePhoton, kBunchedPair, kOther };

std::string_view to_string(DetectionClass c);

/// Success patterns with every detector count <= 1 are single-photon
/// detections; a maximum count of exactly 2 is a bunched pair.
DetectionClass detection_class(const OccupationVector& pattern);

struct LossyOutcome {
  OccupationVector pattern;
  OutcomeClass classification;
  double probability;
  /// Heralded-output fidelity with the ideal amplified qubit, for success
  /// patterns with nonzero probability.
  std::optional<double> fidelity;
};

struct ClassSummary {
  double probability = 0.0;
  /// probability / total success probability: the share of successful
  /// heralds that fall in this class.
  double herald_fraction = 0.0;
  /// Probability-weighted mean fidelity; empty when the class never fires.
  std::optional<double> fidelity;
};

struct LossyReport {
  std::vector<LossyOutcome> outcomes;  // lexicographic by pattern
  ClassSummary single_photon;
  ClassSummary bunched_pair;
  ClassSummary other;
  double success_probability = 0.0;
  double total_probability = 0.0;
};

/// Amplifies the truncated coherent qubit of `alpha` with loss on the
/// resource modes before mixing and on the splitter outputs before
/// detection.
LossyReport lossy_protocol_run(Complex alpha, const GainConfig& cfg,
                               const LossSpec& spec);

}  // namespace teleamp

#endif  // TELEAMP_LOSSY_H_
