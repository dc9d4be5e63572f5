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

#ifndef TELEAMP_PROTOCOL_H_
#define TELEAMP_PROTOCOL_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "teleamp/fock.h"

namespace teleamp {

/// Gain g > 0 and teleamplifier size n >= 1.
class GainConfig {
 public:
  GainConfig(double gain, int size);

  double gain() const { return gain_; }
  int size() const { return size_; }

 private:
  double gain_;
  int size_;
};

/// Amplitudes of a single-rail qubit c0|0> + c1|1>.
struct QubitAmplitudes {
  Complex c0;
  Complex c1;
};

/// Extracts (c0, c1) from a normalized single-mode state. Throws
/// std::invalid_argument on multiphoton support or a non-normalized state.
QubitAmplitudes qubit_amplitudes(const PureState& input);

/// Normalized c0|0> + g c1|1>: the ideal amplifier output.
PureState amplified_qubit(const PureState& input, double gain);

enum class OutcomeClass { kSuccess, kFailVacuum, kFailSaturated };

std::string_view to_string(OutcomeClass c);

/// One detection pattern over the n + 1 splitter outputs.
struct OutcomeRecord {
  OccupationVector pattern;
  int total_m = 0;
  double probability = 0.0;
  /// f(m) = sum_k k * pattern[k] (0-based k).
  long long phase_exponent = 0;
  OutcomeClass classification = OutcomeClass::kFailVacuum;
  /// Unnormalized state left on the n output-side resource modes, after
  /// the phase correction when the outcome is a success.
  PureState residue{0};
  /// Normalized single-mode output for success outcomes with nonzero
  /// probability.
  std::optional<PureState> output;
};

struct ProtocolOptions {
  /// Disable to observe the uncorrected omega^f(m) relative phase.
  bool phase_correction = true;
};

/// |g_n> over 2n modes:
///   N^(-1/2) sum_j g^(n-j) |1>^j |0>^(n-j) |0>^j |1>^(n-j).
PureState resource_state(const GainConfig& cfg);

/// N = sum_{j=0}^n g^(2j), with an exact g = 1 branch.
double normalization_factor(const GainConfig& cfg);

/// Mode layout of the joint state: mode 0 is the input, modes 1..2n are
/// the resource. The splitter mixes modes 0..n; modes n+1..2n carry the
/// output.
std::vector<std::size_t> detector_modes(int size);

/// f(m) = sum_k k * pattern[k], 0-based.
long long phase_exponent(const OccupationVector& pattern);

OutcomeClass classify(int total_m, int size);

/// Runs the teleamplifier on a qubit input and enumerates every detection
/// pattern with 0..n+1 photons, lexicographically ordered by pattern.
std::vector<OutcomeRecord> run_protocol(const PureState& input,
                                        const GainConfig& cfg,
                                        const ProtocolOptions& options = {});

/// Probability of each detected photon total m = 0..n+1, summed over all
/// patterns. The splitter conserves the detected photon number, so this is
/// read off the joint state before mixing and is cheap for any n.
std::vector<double> detected_total_distribution(const PureState& input,
                                                const GainConfig& cfg);

// Closed forms. Each takes |c0|^2 directly, with |c1|^2 = 1 - |c0|^2, or
// a qubit input state.
double prob_fail_vacuum(double c0sq, const GainConfig& cfg);
double prob_fail_saturated(double c0sq, const GainConfig& cfg);
double success_probability(double c0sq, const GainConfig& cfg);
double prob_fail_vacuum(const PureState& input, const GainConfig& cfg);
double prob_fail_saturated(const PureState& input, const GainConfig& cfg);
double success_probability(const PureState& input, const GainConfig& cfg);

/// (1 - g^(2n)) / (1 - g^(2(n+1))), exactly n / (n + 1) at g = 1. The
/// success probability is this factor times |c0|^2 + g^2 |c1|^2.
double success_factor(const GainConfig& cfg);

/// n -> infinity success probability.
double asymptotic_probability(double gain, double c0sq);

/// No-cloning / no-deleting bound: g^-2 for g >= 1, g^2 for g <= 1.
double probability_bound(double gain);

/// |c0|^2 of the input that minimizes the success probability: vacuum when
/// amplifying, a single photon when deamplifying.
double worst_case_c0sq(double gain);

}  // namespace teleamp

#endif  // TELEAMP_PROTOCOL_H_
