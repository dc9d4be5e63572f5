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

#include "teleamp/protocol.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "teleamp/interferometer.h"

namespace teleamp {

GainConfig::GainConfig(double gain, int size) : gain_(gain), size_(size) {
  if (!(gain > 0.0) || !std::isfinite(gain)) {
    throw std::invalid_argument("gain must be positive and finite");
  }
  if (size < 1) throw std::invalid_argument("teleamplifier size must be at least 1");
}

QubitAmplitudes qubit_amplitudes(const PureState& input) {
  if (input.modes() != 1) throw std::invalid_argument("input must be a single-mode state");
  if (input.max_photons() > 1) {
    throw std::invalid_argument("input has support beyond one photon");
  }
  if (std::abs(input.norm2() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("input state is not normalized");
  }
  return {input.amplitude(OccupationVector{0}), input.amplitude(OccupationVector{1})};
}

PureState amplified_qubit(const PureState& input, double gain) {
  QubitAmplitudes q = qubit_amplitudes(input);
  return normalize(PureState::single_mode({q.c0, gain * q.c1})).state;
}

std::string_view to_string(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::kSuccess: return "success";
    case OutcomeClass::kFailVacuum: return "fail_vacuum";
    case OutcomeClass::kFailSaturated: return "fail_saturated";
  }
  return "unknown";
}

PureState resource_state(const GainConfig& cfg) {
  const int n = cfg.size();
  const double norm = std::sqrt(normalization_factor(cfg));
  PureState s(2 * n);
  for (int j = 0; j <= n; ++j) {
    std::vector<int> counts(2 * n, 0);
    for (int k = 0; k < j; ++k) counts[k] = 1;
    for (int k = n + j; k < 2 * n; ++k) counts[k] = 1;
    s.accumulate(OccupationVector(std::move(counts)),
                 std::pow(cfg.gain(), n - j) / norm);
  }
  s.prune();
  return s;
}

double normalization_factor(const GainConfig& cfg) {
  const double g2 = cfg.gain() * cfg.gain();
  if (cfg.gain() == 1.0) return cfg.size() + 1.0;
  return (1.0 - std::pow(g2, cfg.size() + 1)) / (1.0 - g2);
}

std::vector<std::size_t> detector_modes(int size) {
  std::vector<std::size_t> modes(size + 1);
  std::iota(modes.begin(), modes.end(), std::size_t{0});
  return modes;
}

long long phase_exponent(const OccupationVector& pattern) {
  long long f = 0;
  for (std::size_t k = 0; k < pattern.size(); ++k) f += static_cast<long long>(k) * pattern[k];
  return f;
}

OutcomeClass classify(int total_m, int size) {
  if (total_m == 0) return OutcomeClass::kFailVacuum;
  if (total_m > size) return OutcomeClass::kFailSaturated;
  return OutcomeClass::kSuccess;
}

std::vector<OutcomeRecord> run_protocol(const PureState& input,
                                        const GainConfig& cfg,
                                        const ProtocolOptions& options) {
  qubit_amplitudes(input);
  const int n = cfg.size();
  const std::vector<std::size_t> detectors = detector_modes(n);

  PureState joint = tensor(input, resource_state(cfg));
  PureState mixed = apply_unitary(qft_splitter(n + 1), joint, detectors);
  std::map<OccupationVector, PureState> heralded = split_by_pattern(mixed, detectors);

  std::vector<OutcomeRecord> records;
  for (int m = 0; m <= n + 1; ++m) {
    for (OccupationVector& pattern : weak_compositions(m, n + 1)) {
      OutcomeRecord rec;
      rec.total_m = m;
      rec.phase_exponent = phase_exponent(pattern);
      rec.classification = classify(m, n);
      auto it = heralded.find(pattern);
      rec.residue = it == heralded.end() ? PureState(n) : it->second;
      rec.pattern = std::move(pattern);

      if (rec.classification == OutcomeClass::kSuccess) {
        const std::size_t out_mode = static_cast<std::size_t>(m - 1);
        if (options.phase_correction) {
          rec.residue = apply_number_phase(rec.residue, out_mode,
                                           root_of_unity(n + 1, rec.phase_exponent));
        }
        if (!rec.residue.empty()) {
          const std::size_t keep[] = {out_mode};
          std::vector<PureState> parts = reduce_to_modes(rec.residue, keep);
          if (parts.size() != 1) {
            throw std::logic_error("heralded output is entangled with spectator modes");
          }
          rec.output = normalize(parts.front()).state;
        }
      }
      rec.probability = rec.residue.norm2();
      records.push_back(std::move(rec));
    }
  }
  std::sort(records.begin(), records.end(),
            [](const OutcomeRecord& a, const OutcomeRecord& b) { return a.pattern < b.pattern; });
  return records;
}

std::vector<double> detected_total_distribution(const PureState& input,
                                                const GainConfig& cfg) {
  qubit_amplitudes(input);
  const int n = cfg.size();
  PureState joint = tensor(input, resource_state(cfg));
  std::vector<double> dist(n + 2, 0.0);
  for (const auto& [occ, amp] : joint.amplitudes()) {
    int m = 0;
    for (int k = 0; k <= n; ++k) m += occ[k];
    dist.at(m) += std::norm(amp);
  }
  return dist;
}

namespace {

void check_c0sq(double c0sq) {
  if (!(c0sq >= 0.0 && c0sq <= 1.0)) {
    throw std::invalid_argument("|c0|^2 must lie in [0, 1]");
  }
}

double c0sq_of(const PureState& input) { return std::norm(qubit_amplitudes(input).c0); }

}  // namespace

double prob_fail_vacuum(double c0sq, const GainConfig& cfg) {
  check_c0sq(c0sq);
  return std::pow(cfg.gain(), 2 * cfg.size()) * c0sq / normalization_factor(cfg);
}

double prob_fail_saturated(double c0sq, const GainConfig& cfg) {
  check_c0sq(c0sq);
  return (1.0 - c0sq) / normalization_factor(cfg);
}

double success_factor(const GainConfig& cfg) {
  const double n = cfg.size();
  if (cfg.gain() == 1.0) return n / (n + 1.0);
  const double g2 = cfg.gain() * cfg.gain();
  return (1.0 - std::pow(g2, n)) / (1.0 - std::pow(g2, n + 1.0));
}

double success_probability(double c0sq, const GainConfig& cfg) {
  check_c0sq(c0sq);
  if (cfg.gain() == 1.0) return success_factor(cfg);
  const double g2 = cfg.gain() * cfg.gain();
  return success_factor(cfg) * (c0sq + g2 * (1.0 - c0sq));
}

double prob_fail_vacuum(const PureState& input, const GainConfig& cfg) {
  return prob_fail_vacuum(c0sq_of(input), cfg);
}

double prob_fail_saturated(const PureState& input, const GainConfig& cfg) {
  return prob_fail_saturated(c0sq_of(input), cfg);
}

double success_probability(const PureState& input, const GainConfig& cfg) {
  return success_probability(c0sq_of(input), cfg);
}

double asymptotic_probability(double gain, double c0sq) {
  check_c0sq(c0sq);
  if (!(gain > 0.0)) throw std::invalid_argument("gain must be positive");
  const double c1sq = 1.0 - c0sq;
  if (gain > 1.0) return c0sq / (gain * gain) + c1sq;
  if (gain == 1.0) return 1.0;
  return c0sq + gain * gain * c1sq;
}

double probability_bound(double gain) {
  if (!(gain > 0.0)) throw std::invalid_argument("gain must be positive");
  if (gain >= 1.0) return 1.0 / (gain * gain);
  return gain * gain;
}

double worst_case_c0sq(double gain) {
  if (!(gain > 0.0)) throw std::invalid_argument("gain must be positive");
  return gain >= 1.0 ? 1.0 : 0.0;
}

}  // namespace teleamp
