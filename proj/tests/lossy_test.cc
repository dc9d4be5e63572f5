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

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <utility>

#include <gtest/gtest.h>

#include "teleamp/oracles.h"

namespace teleamp {
namespace {

using Density = std::map<std::pair<OccupationVector, OccupationVector>, Complex>;

// Dense rho = sum_i w_i |phi_i><phi_i| keyed by (ket, bra).
Density density(const MixedState& rho) {
  Density d;
  for (const auto& b : rho.branches()) {
    for (const auto& [ket, a] : b.state.amplitudes()) {
      for (const auto& [bra, c] : b.state.amplitudes()) {
        d[{ket, bra}] += b.weight * a * std::conj(c);
      }
    }
  }
  return d;
}

double max_diff(const Density& a, const Density& b) {
  double worst = 0.0;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    worst = std::max(worst, std::abs(v - (it == b.end() ? Complex() : it->second)));
  }
  for (const auto& [k, v] : b) {
    if (!a.contains(k)) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

Complex entry(const Density& d, int ket, int bra) {
  auto it = d.find({OccupationVector({ket}), OccupationVector({bra})});
  return it == d.end() ? Complex() : it->second;
}

double trace(const Density& d) {
  double t = 0.0;
  for (const auto& [k, v] : d) {
    if (k.first == k.second) t += v.real();
  }
  return t;
}

TEST(LossSpec, Validation) {
  EXPECT_THROW(LossSpec(0.0), std::invalid_argument);
  EXPECT_THROW(LossSpec(1.01), std::invalid_argument);
  EXPECT_NO_THROW(LossSpec(1.0));
  EXPECT_THROW(loss_channel(PureState::basis({1}), 0.0, 0), std::invalid_argument);
  EXPECT_THROW(loss_channel(PureState::basis({1}), 0.5, 1), std::out_of_range);
}

TEST(LossChannel, UnitTransmissivityIsIdentity) {
  std::mt19937_64 rng(1);
  PureState s = oracles::random_state(rng, 2, 3, 5);
  EXPECT_LE(max_diff(density(loss_channel(s, 1.0, 0)), density(MixedState(s))), 1e-15);
}

TEST(LossChannel, SinglePhoton) {
  auto images = loss_kraus_images(PureState::basis({1}), 0.3, 0);
  ASSERT_EQ(images.size(), 2u);
  EXPECT_NEAR(images[0].amplitude(OccupationVector({1})).real(), std::sqrt(0.3), 1e-15);
  EXPECT_NEAR(images[1].amplitude(OccupationVector({0})).real(), std::sqrt(0.7), 1e-15);
}

TEST(LossChannel, TwoPhotonBinomialWeights) {
  MixedState rho = loss_channel(PureState::basis({2}), 0.7, 0);
  Density d = density(rho);
  EXPECT_NEAR(entry(d, 2, 2).real(), 0.49, 1e-15);
  EXPECT_NEAR(entry(d, 1, 1).real(), 0.42, 1e-15);
  EXPECT_NEAR(entry(d, 0, 0).real(), 0.09, 1e-15);
}

TEST(LossChannel, CoherenceDecay) {
  // (|0> + |1>)/sqrt 2 keeps off-diagonal sqrt(eta)/2.
  const double eta = 0.64;
  PureState plus = PureState::single_mode({M_SQRT1_2, M_SQRT1_2});
  Density d = density(loss_channel(plus, eta, 0));
  EXPECT_NEAR(std::abs(entry(d, 0, 1)), 0.4, 1e-15);
  EXPECT_NEAR(entry(d, 1, 1).real(), 0.32, 1e-15);
}

TEST(LossChannel, CompositionAndTrace) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    PureState s = oracles::random_state(rng, 2, 3, 6);
    const double e1 = 0.2 + 0.75 * std::uniform_real_distribution<>(0.0, 1.0)(rng);
    const double e2 = 0.2 + 0.75 * std::uniform_real_distribution<>(0.0, 1.0)(rng);
    for (std::size_t mode : {0u, 1u}) {
      MixedState twice = loss_channel(loss_channel(s, e2, mode), e1, mode);
      MixedState once = loss_channel(s, e1 * e2, mode);
      EXPECT_LE(max_diff(density(twice), density(once)), 1e-12);
      EXPECT_NEAR(trace(density(once)), 1.0, 1e-12);
      EXPECT_NEAR(once.total_weight(), 1.0, 1e-12);
    }
  }
}

TEST(LossChannel, CommutesAcrossModes) {
  std::mt19937_64 rng(9);
  PureState s = oracles::random_state(rng, 2, 2, 5);
  MixedState ab = loss_channel(loss_channel(s, 0.6, 0), 0.3, 1);
  MixedState ba = loss_channel(loss_channel(s, 0.3, 1), 0.6, 0);
  EXPECT_LE(max_diff(density(ab), density(ba)), 1e-12);
}

TEST(CoherentStates, Shapes) {
  PureState q = coherent_qubit(Complex(0.1, 0.0));
  EXPECT_NEAR(q.norm2(), 1.0, 1e-15);
  EXPECT_NEAR(q.amplitude(OccupationVector({1})).real() / q.amplitude(OccupationVector({0})).real(),
              0.1, 1e-15);
  PureState c = coherent_state(Complex(0.5, 0.2));
  EXPECT_NEAR(c.norm2(), 1.0, 1e-15);
  EXPECT_EQ(coherent_state(Complex()).term_count(), 1u);
}

TEST(CutoffCeiling, ClosedForm) {
  EXPECT_NEAR(cutoff_ceiling(Complex(), 2.0), 1.0, 1e-15);
  for (double g : {1.0, 1.5, 2.0, 3.0}) {
    const double x = g * g * 0.01;
    EXPECT_NEAR(cutoff_ceiling(Complex(0.1, 0.0), g), std::exp(-x) * (1.0 + x), 1e-14);
  }
  double previous = 1.0;
  for (int i = 0; i <= 40; ++i) {
    const double value = cutoff_ceiling(Complex(0.1, 0.0), 1.0 + 0.05 * i);
    EXPECT_LE(value, previous);
    previous = value;
  }
}

TEST(DetectionClass, Classification) {
  EXPECT_EQ(detection_class(OccupationVector({1, 0, 1})), DetectionClass::kSinglePhoton);
  EXPECT_EQ(detection_class(OccupationVector({0, 2, 0})), DetectionClass::kBunchedPair);
  EXPECT_EQ(detection_class(OccupationVector({3, 0, 0})), DetectionClass::kOther);
}

TEST(LossyRun, LosslessMatchesIdeal) {
  for (int n = 1; n <= 2; ++n) {
    for (double g : {0.5, 1.0, 2.0}) {
      LossyReport r = lossy_protocol_run(Complex(0.1, 0.0), GainConfig(g, n), LossSpec(1.0));
      EXPECT_NEAR(r.total_probability, 1.0, 1e-10);
      EXPECT_NEAR(r.success_probability,
                  success_probability(coherent_qubit(Complex(0.1, 0.0)), GainConfig(g, n)),
                  1e-12);
      for (const auto& o : r.outcomes) {
        if (o.fidelity) {
          EXPECT_NEAR(*o.fidelity, 1.0, 1e-12) << o.pattern.label();
        }
      }
    }
  }
}

TEST(LossyRun, TraceAndFidelityBounds) {
  for (int n = 1; n <= 2; ++n) {
    for (double g : {1.0, 2.0, 3.0}) {
      LossyReport r = lossy_protocol_run(Complex(0.1, 0.0), GainConfig(g, n), LossSpec(0.7));
      EXPECT_NEAR(r.total_probability, 1.0, 1e-10);
      ASSERT_TRUE(r.single_photon.fidelity.has_value());
      EXPECT_LE(*r.single_photon.fidelity, 1.0 + 1e-12);
      EXPECT_GT(*r.single_photon.fidelity, 0.9);
      const double shares =
          r.single_photon.herald_fraction + r.bunched_pair.herald_fraction + r.other.herald_fraction;
      EXPECT_NEAR(shares, 1.0, 1e-12);

      LossyReport almost =
          lossy_protocol_run(Complex(0.1, 0.0), GainConfig(g, n), LossSpec(0.999));
      EXPECT_GE(*almost.single_photon.fidelity, 1.0 - 1e-2);
    }
  }
}

TEST(LossyRun, ReferenceValues) {
  // Frozen from an independent dense density-matrix simulation.
  const double expected[] = {0.999859188373, 0.999011694943, 0.996457785736};
  for (int i = 0; i < 3; ++i) {
    LossyReport r =
        lossy_protocol_run(Complex(0.1, 0.0), GainConfig(1.0 + i, 1), LossSpec(0.7));
    EXPECT_NEAR(*r.single_photon.fidelity, expected[i], 1e-11);
  }
}

TEST(LossyRun, SinglePhotonShareGrowsWithGain) {
  double previous = 0.0;
  for (double g : {1.0, std::numbers::sqrt2, 2.0}) {
    LossyReport r = lossy_protocol_run(Complex(0.1, 0.0), GainConfig(g, 2), LossSpec(0.7));
    EXPECT_GT(r.single_photon.herald_fraction, previous);
    previous = r.single_photon.herald_fraction;
  }
}

}  // namespace
}  // namespace teleamp
