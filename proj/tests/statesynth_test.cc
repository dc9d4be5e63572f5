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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "teleamp/interferometer.h"
#include "teleamp/oracles.h"

namespace teleamp {
namespace {

TEST(ControlledBeamSplitter, OccupiedControlIsIdentity) {
  PureState s = PureState::basis({1, 1, 0});
  PureState out = controlled_beam_splitter(s, {0, 1, 2, 0.4});
  EXPECT_EQ(out.term_count(), 1u);
  EXPECT_EQ(out.amplitude(OccupationVector({1, 1, 0})), Complex(1.0));
}

TEST(ControlledBeamSplitter, EmptyControlSplits) {
  const double g = 1.3;
  const double tau = g * g / (1.0 + g * g);
  PureState out = controlled_beam_splitter(PureState::basis({0, 1, 0}), {0, 1, 2, tau});
  EXPECT_NEAR(out.amplitude(OccupationVector({0, 1, 0})).real(), std::sqrt(1.0 / (1.0 + g * g)),
              1e-15);
  EXPECT_NEAR(out.amplitude(OccupationVector({0, 0, 1})).real(), std::sqrt(tau), 1e-15);
}

TEST(ControlledBeamSplitter, LinearOnSuperpositions) {
  const double tau = 0.35;
  const Complex a(0.6, 0.0), b(0.0, 0.8);
  PureState s(3, {{OccupationVector({0, 1, 0}), a}, {OccupationVector({1, 1, 0}), b}});
  PureState out = controlled_beam_splitter(s, {0, 1, 2, tau});
  // Manual expansion: only the control-empty ket is mixed.
  EXPECT_LE(std::abs(out.amplitude(OccupationVector({0, 1, 0})) - a * std::sqrt(1.0 - tau)), 1e-15);
  EXPECT_LE(std::abs(out.amplitude(OccupationVector({0, 0, 1})) - a * std::sqrt(tau)), 1e-15);
  EXPECT_LE(std::abs(out.amplitude(OccupationVector({1, 1, 0})) - b), 1e-15);
}

TEST(ControlledBeamSplitter, PreservesNorm) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    PureState s = oracles::random_state(rng, 4, 3, 10);
    PureState out = controlled_beam_splitter(s, {2, 0, 3, 0.1 + 0.04 * trial});
    EXPECT_NEAR(out.norm2(), s.norm2(), 1e-12);
  }
}

TEST(ControlledBeamSplitter, Validation) {
  PureState s = PureState::basis({0, 1, 0});
  EXPECT_THROW(controlled_beam_splitter(s, {0, 0, 2, 0.5}), std::invalid_argument);
  EXPECT_THROW(controlled_beam_splitter(s, {0, 1, 1, 0.5}), std::invalid_argument);
  EXPECT_THROW(controlled_beam_splitter(s, {0, 1, 3, 0.5}), std::out_of_range);
  EXPECT_THROW(controlled_beam_splitter(s, {0, 1, 2, 1.5}), std::invalid_argument);
}

TEST(Synthesis, SizeOneIsASingleSplitter) {
  const double g = 0.7;
  PureState bs = apply_unitary(beam_splitter(g * g / (1.0 + g * g)), PureState::basis({1, 0}));
  SynthesisResult r = synthesize_resource(GainConfig(g, 1));
  EXPECT_NEAR(fidelity_pure(r.state, bs), 1.0, 1e-14);
  EXPECT_NEAR(fidelity_pure(r.state, resource_state(GainConfig(g, 1))), 1.0, 1e-14);
  EXPECT_EQ(r.physical_success_probability, 1.0);
}

TEST(Synthesis, MatchesResourceState) {
  for (int n = 1; n <= 4; ++n) {
    for (double g : {0.5, 1.0, std::numbers::sqrt2, 2.0}) {
      GainConfig cfg(g, n);
      SynthesisResult r = synthesize_resource(cfg);
      EXPECT_GE(fidelity_pure(r.state, resource_state(cfg)), 1.0 - 1e-10) << n << " " << g;
      EXPECT_DOUBLE_EQ(r.physical_success_probability, std::pow(16.0, -(n - 1)));
    }
  }
}

TEST(ModeShift, RotatesLeft) {
  PureState s = shift_modes(PureState::basis({1, 2, 0, 3}));
  EXPECT_EQ(s.amplitude(OccupationVector({2, 0, 3, 1})), Complex(1.0));
}

TEST(ModeShift, GeneratesResourceState) {
  for (int n = 1; n <= 4; ++n) {
    const double g = 1.4;
    GainConfig cfg(g, n);
    std::vector<int> start(2 * n, 0);
    for (int k = 0; k < n; ++k) start[k] = 1;
    PureState term = PureState::basis(OccupationVector(start));
    PureState sum(2 * n);
    for (int j = 0; j <= n; ++j) {
      sum = add(sum, term);
      term = shift_modes(term).scaled(g);
    }
    sum = sum.scaled(1.0 / std::sqrt(normalization_factor(cfg)));
    PureState direct = resource_state(cfg);
    ASSERT_EQ(sum.term_count(), direct.term_count());
    for (const auto& [occ, amp] : direct.amplitudes()) {
      EXPECT_LE(std::abs(sum.amplitude(occ) - amp), 1e-14) << occ.label();
    }
  }
}

}  // namespace
}  // namespace teleamp
