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

#include "teleamp/lossy.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "teleamp/interferometer.h"

namespace teleamp {

namespace {

void check_eta(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("loss transmissivity must lie in (0, 1]");
  }
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Applies loss on each listed mode to every component of an ensemble.
std::vector<PureState> apply_loss(std::vector<PureState> components, double eta,
                                  std::span<const std::size_t> modes) {
  for (std::size_t mode : modes) {
    std::vector<PureState> next;
    for (const PureState& c : components) {
      for (PureState& image : loss_kraus_images(c, eta, mode)) next.push_back(std::move(image));
    }
    components = std::move(next);
  }
  return components;
}

}  // namespace

LossSpec::LossSpec(double eta, LossLocations locations)
    : eta_(eta), locations_(locations) {
  check_eta(eta);
}

std::vector<PureState> loss_kraus_images(const PureState& s, double eta,
                                         std::size_t mode) {
  check_eta(eta);
  if (mode >= s.modes()) throw std::out_of_range("mode index out of range");
  const int max_n = s.max_photons();
  std::vector<PureState> images;
  for (int k = 0; k <= max_n; ++k) {
    PureState image(s.modes());
    for (const auto& [occ, amp] : s.amplitudes()) {
      const int n = occ[mode];
      if (n < k) continue;
      const double weight =
          binomial(n, k) * std::pow(eta, n - k) * std::pow(1.0 - eta, k);
      image.accumulate(occ.with(mode, n - k), amp * std::sqrt(weight));
    }
    image.prune();
    if (!image.empty()) images.push_back(std::move(image));
  }
  return images;
}

MixedState loss_channel(const PureState& s, double eta, std::size_t mode) {
  return MixedState::from_components(loss_kraus_images(s, eta, mode));
}

MixedState loss_channel(const MixedState& rho, double eta, std::size_t mode) {
  std::vector<PureState> components;
  for (const Branch& b : rho.branches()) {
    for (PureState& image : loss_kraus_images(b.state.scaled(std::sqrt(b.weight)), eta, mode)) {
      components.push_back(std::move(image));
    }
  }
  return MixedState::from_components(std::move(components));
}

PureState coherent_qubit(Complex alpha) {
  return normalize(PureState::single_mode({Complex(1.0, 0.0), alpha})).state;
}

PureState coherent_state(Complex alpha) {
  const double mean = std::norm(alpha);
  std::vector<Complex> amps;
  Complex term = std::exp(-mean / 2.0);
  double captured = 0.0;
  for (int j = 0;; ++j) {
    if (j > 0) term *= alpha / std::sqrt(static_cast<double>(j));
    amps.push_back(term);
    captured += std::norm(term);
    // Past the peak the terms fall off at least geometrically.
    if (j > mean && 1.0 - captured < 1e-16) break;
    if (j > mean && std::norm(term) < 1e-20) break;
  }
  return PureState::single_mode(amps);
}

double cutoff_ceiling(Complex alpha, double gain) {
  PureState ideal = amplified_qubit(coherent_qubit(alpha), gain);
  return fidelity_pure(coherent_state(gain * alpha), ideal);
}

std::string_view to_string(DetectionClass c) {
  switch (c) {
    case DetectionClass::kSinglePhoton: return "single_photon";
    case DetectionClass::kBunchedPair: return "bunched_pair";
    case DetectionClass::kOther: return "other";
  }
  return "unknown";
}

DetectionClass detection_class(const OccupationVector& pattern) {
  int most = 0;
  for (int c : pattern.counts()) most = std::max(most, c);
  if (most <= 1) return DetectionClass::kSinglePhoton;
  if (most == 2) return DetectionClass::kBunchedPair;
  return DetectionClass::kOther;
}

LossyReport lossy_protocol_run(Complex alpha, const GainConfig& cfg,
                               const LossSpec& spec) {
  const int n = cfg.size();
  const PureState input = coherent_qubit(alpha);
  const PureState target = amplified_qubit(input, cfg.gain());
  const std::vector<std::size_t> detectors = detector_modes(n);

  std::vector<PureState> resource{resource_state(cfg)};
  if (spec.locations().resource_modes) {
    std::vector<std::size_t> all(2 * n);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    resource = apply_loss(std::move(resource), spec.eta(), all);
  }

  const ScatteringMatrix splitter = qft_splitter(n + 1);
  std::vector<PureState> components;
  components.reserve(resource.size());
  for (const PureState& r : resource) {
    components.push_back(apply_unitary(splitter, tensor(input, r), detectors));
  }
  if (spec.locations().before_detectors) {
    components = apply_loss(std::move(components), spec.eta(), detectors);
  }

  std::map<OccupationVector, std::vector<PureState>> heralded;
  for (const PureState& c : components) {
    for (auto& [pattern, residue] : split_by_pattern(c, detectors)) {
      heralded[pattern].push_back(std::move(residue));
    }
  }

  LossyReport report;
  double single_overlap = 0.0, bunched_overlap = 0.0, other_overlap = 0.0;
  for (int m = 0; m <= n + 1; ++m) {
    for (OccupationVector& pattern : weak_compositions(m, n + 1)) {
      LossyOutcome out{pattern, classify(m, n), 0.0, std::nullopt};
      auto it = heralded.find(pattern);
      if (it != heralded.end()) {
        double overlap = 0.0;
        const Complex phase = root_of_unity(n + 1, phase_exponent(pattern));
        for (const PureState& residue : it->second) {
          out.probability += residue.norm2();
          if (out.classification != OutcomeClass::kSuccess) continue;
          const std::size_t keep[] = {static_cast<std::size_t>(m - 1)};
          PureState corrected = apply_number_phase(residue, keep[0], phase);
          for (const PureState& part : reduce_to_modes(corrected, keep)) {
            overlap += std::norm(inner_product(target, part));
          }
        }
        if (out.classification == OutcomeClass::kSuccess && out.probability > 0.0) {
          out.fidelity = overlap / out.probability;
          report.success_probability += out.probability;
          switch (detection_class(pattern)) {
            case DetectionClass::kSinglePhoton:
              report.single_photon.probability += out.probability;
              single_overlap += overlap;
              break;
            case DetectionClass::kBunchedPair:
              report.bunched_pair.probability += out.probability;
              bunched_overlap += overlap;
              break;
            case DetectionClass::kOther:
              report.other.probability += out.probability;
              other_overlap += overlap;
              break;
          }
        }
      }
      report.total_probability += out.probability;
      report.outcomes.push_back(std::move(out));
    }
  }
  std::sort(report.outcomes.begin(), report.outcomes.end(),
            [](const LossyOutcome& a, const LossyOutcome& b) { return a.pattern < b.pattern; });

  auto finish = [&report](ClassSummary& s, double overlap) {
    if (s.probability > 0.0) {
      s.fidelity = overlap / s.probability;
      s.herald_fraction = s.probability / report.success_probability;
    }
  };
  finish(report.single_photon, single_overlap);
  finish(report.bunched_pair, bunched_overlap);
  finish(report.other, other_overlap);
  return report;
}

}  // namespace teleamp
