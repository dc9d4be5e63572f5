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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "teleamp/oracles.h"

namespace teleamp {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
const double kGains[] = {0.5, 1.0, kSqrt2, 2.0};

PureState qubit(double c0sq) {
  return PureState::single_mode({std::sqrt(c0sq), std::sqrt(1.0 - c0sq)});
}

TEST(GainConfig, Validation) {
  EXPECT_THROW(GainConfig(0.0, 1), std::invalid_argument);
  EXPECT_THROW(GainConfig(-1.0, 1), std::invalid_argument);
  EXPECT_THROW(GainConfig(1.0, 0), std::invalid_argument);
  EXPECT_NO_THROW(GainConfig(0.1, 12));
}

TEST(ResourceState, SizeOne) {
  const double g = 1.7;
  PureState s = resource_state(GainConfig(g, 1));
  const double norm = std::sqrt(1.0 + g * g);
  EXPECT_NEAR(s.amplitude(OccupationVector({1, 0})).real(), 1.0 / norm, 1e-15);
  EXPECT_NEAR(s.amplitude(OccupationVector({0, 1})).real(), g / norm, 1e-15);
  EXPECT_EQ(s.term_count(), 2u);
}

TEST(ResourceState, SizeTwo) {
  const double g = 0.8;
  PureState s = resource_state(GainConfig(g, 2));
  const double norm = std::sqrt(1.0 + g * g + g * g * g * g);
  EXPECT_NEAR(s.amplitude(OccupationVector({1, 1, 0, 0})).real(), 1.0 / norm, 1e-15);
  EXPECT_NEAR(s.amplitude(OccupationVector({1, 0, 0, 1})).real(), g / norm, 1e-15);
  EXPECT_NEAR(s.amplitude(OccupationVector({0, 0, 1, 1})).real(), g * g / norm, 1e-15);
}

TEST(ResourceState, Structure) {
  for (int n = 1; n <= 6; ++n) {
    PureState s = resource_state(GainConfig(1.3, n));
    EXPECT_EQ(s.modes(), static_cast<std::size_t>(2 * n));
    EXPECT_EQ(s.term_count(), static_cast<std::size_t>(n + 1));
    EXPECT_NEAR(s.norm2(), 1.0, 1e-14);
    for (const auto& [occ, amp] : s.amplitudes()) EXPECT_EQ(occ.total_photons(), n);
  }
}

TEST(Normalization, Examples) {
  EXPECT_EQ(normalization_factor(GainConfig(1.0, 3)), 4.0);
  EXPECT_DOUBLE_EQ(normalization_factor(GainConfig(2.0, 1)), 5.0);
  EXPECT_DOUBLE_EQ(normalization_factor(GainConfig(0.5, 2)), 1.3125);
}

TEST(ClosedForms, Examples) {
  EXPECT_DOUBLE_EQ(prob_fail_vacuum(1.0, GainConfig(1.0, 1)), 0.5);
  EXPECT_DOUBLE_EQ(prob_fail_vacuum(1.0, GainConfig(2.0, 1)), 0.8);
  EXPECT_EQ(prob_fail_vacuum(0.0, GainConfig(2.0, 3)), 0.0);
  EXPECT_EQ(prob_fail_saturated(1.0, GainConfig(2.0, 3)), 0.0);
  EXPECT_DOUBLE_EQ(prob_fail_saturated(0.0, GainConfig(1.0, 1)), 0.5);
  EXPECT_EQ(success_probability(0.3, GainConfig(1.0, 4)), 0.8);
  EXPECT_NEAR(success_probability(1.0, GainConfig(kSqrt2, 10)), 1023.0 / 2047.0, 1e-12);
  EXPECT_EQ(asymptotic_probability(1.0, 0.4), 1.0);
  EXPECT_NEAR(asymptotic_probability(kSqrt2, 1.0), 0.5, 1e-15);
  EXPECT_NEAR(asymptotic_probability(0.5, 0.0), 0.25, 1e-15);
  EXPECT_EQ(probability_bound(1.0), 1.0);
  EXPECT_NEAR(probability_bound(kSqrt2), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(probability_bound(2.0), 0.25);
  EXPECT_DOUBLE_EQ(probability_bound(0.5), 0.25);
}

TEST(ClosedForms, ProbabilitiesPartitionUnity) {
  for (double g : kGains) {
    for (int n = 1; n <= 10; ++n) {
      for (double c0sq : {0.0, 0.2, 0.7, 1.0}) {
        GainConfig cfg(g, n);
        EXPECT_NEAR(success_probability(c0sq, cfg) + prob_fail_vacuum(c0sq, cfg) +
                        prob_fail_saturated(c0sq, cfg),
                    1.0, 1e-12);
      }
    }
  }
}

TEST(ClosedForms, MonotoneInSize) {
  for (double g : {0.3, 0.5, 1.0, kSqrt2, 2.0, 3.0}) {
    for (double c0sq : {0.0, 0.5, 1.0}) {
      for (int n = 1; n <= 10; ++n) {
        EXPECT_GT(success_probability(c0sq, GainConfig(g, n + 1)),
                  success_probability(c0sq, GainConfig(g, n)))
            << "g=" << g << " n=" << n;
      }
    }
  }
}

TEST(ClosedForms, BoundedByNoCloning) {
  for (double g : {0.3, 0.5, 0.9, 1.0, 1.1, kSqrt2, 2.0, 3.0}) {
    const double c0sq = worst_case_c0sq(g);
    double previous_gap = 1.0;
    for (int n = 1; n <= 10; ++n) {
      const double p = success_probability(c0sq, GainConfig(g, n));
      const double gap = probability_bound(g) - p;
      EXPECT_GE(gap, -1e-12);
      if (g != 1.0) {
        EXPECT_LT(gap, previous_gap);
      }
      previous_gap = gap;
    }
    EXPECT_NEAR(asymptotic_probability(g, c0sq), probability_bound(g), 1e-15);
  }
}

TEST(QubitInput, Validation) {
  EXPECT_THROW(run_protocol(PureState::single_mode({0.6, 0.0, 0.8}), GainConfig(1.0, 1)),
               std::invalid_argument);
  EXPECT_THROW(run_protocol(PureState::single_mode({0.6, 0.6}), GainConfig(1.0, 1)),
               std::invalid_argument);
  EXPECT_THROW(run_protocol(PureState::vacuum(2), GainConfig(1.0, 1)), std::invalid_argument);
}

TEST(RunProtocol, ScissorsSinglePhoton) {
  auto records = run_protocol(PureState::basis({1}), GainConfig(1.0, 1));
  double success = 0.0;
  for (const auto& r : records) {
    if (r.classification == OutcomeClass::kSuccess) {
      success += r.probability;
      ASSERT_TRUE(r.output.has_value());
      EXPECT_NEAR(fidelity_pure(*r.output, PureState::basis({1})), 1.0, 1e-12);
    }
  }
  EXPECT_NEAR(success, 0.5, 1e-12);
}

TEST(RunProtocol, OrderingAndPhaseExponent) {
  auto records = run_protocol(qubit(0.4), GainConfig(1.2, 2));
  for (std::size_t i = 1; i < records.size(); ++i) {
    EXPECT_LT(records[i - 1].pattern, records[i].pattern);
  }
  // Patterns with 0..3 photons over 3 detectors: 1 + 3 + 6 + 10.
  EXPECT_EQ(records.size(), 20u);
  EXPECT_EQ(phase_exponent(OccupationVector({1, 2, 1})), 4);
  EXPECT_EQ(classify(0, 2), OutcomeClass::kFailVacuum);
  EXPECT_EQ(classify(3, 2), OutcomeClass::kFailSaturated);
  EXPECT_EQ(classify(2, 2), OutcomeClass::kSuccess);
}

TEST(RunProtocol, VacuumPatternResidue) {
  for (int n = 1; n <= 3; ++n) {
    const double g = 1.5, c0sq = 0.3;
    GainConfig cfg(g, n);
    auto records = run_protocol(qubit(c0sq), cfg);
    const auto& vac = records.front();
    ASSERT_EQ(vac.pattern, OccupationVector::vacuum(n + 1));
    EXPECT_EQ(vac.classification, OutcomeClass::kFailVacuum);
    ASSERT_EQ(vac.residue.term_count(), 1u);
    std::vector<int> ones(n, 1);
    const Complex amp = vac.residue.amplitude(OccupationVector(ones));
    EXPECT_NEAR(std::abs(amp),
                std::pow(g, n) * std::sqrt(c0sq) / std::sqrt(normalization_factor(cfg)), 1e-13);
  }
}

TEST(RunProtocol, AgreesWithClosedFormsOnGrid) {
  std::mt19937_64 rng(314);
  for (int n = 1; n <= 3; ++n) {
    for (double g : kGains) {
      GainConfig cfg(g, n);
      for (int trial = 0; trial < 5; ++trial) {
        PureState input = oracles::random_qubit(rng);
        PureState target = amplified_qubit(input, g);
        double total = 0.0, success = 0.0, vacuum = 0.0, saturated = 0.0;
        for (const auto& r : run_protocol(input, cfg)) {
          total += r.probability;
          switch (r.classification) {
            case OutcomeClass::kSuccess:
              success += r.probability;
              if (r.output) {
                EXPECT_GE(fidelity_pure(*r.output, target), 1.0 - 1e-12);
              }
              break;
            case OutcomeClass::kFailVacuum:
              vacuum += r.probability;
              break;
            case OutcomeClass::kFailSaturated:
              saturated += r.probability;
              break;
          }
        }
        EXPECT_NEAR(total, 1.0, 1e-10);
        EXPECT_NEAR(success, success_probability(input, cfg), 1e-10);
        EXPECT_NEAR(vacuum, prob_fail_vacuum(input, cfg), 1e-10);
        EXPECT_NEAR(saturated, prob_fail_saturated(input, cfg), 1e-10);
      }
    }
  }
}

TEST(RunProtocol, PhaseCorrectionIsNeeded) {
  const GainConfig cfg(kSqrt2, 2);
  PureState input = PureState::single_mode({M_SQRT1_2, Complex(0.0, M_SQRT1_2)});
  PureState target = amplified_qubit(input, kSqrt2);
  double worst = 1.0;
  for (const auto& r : run_protocol(input, cfg, {.phase_correction = false})) {
    if (r.output) worst = std::min(worst, fidelity_pure(*r.output, target));
  }
  EXPECT_LT(worst, 0.99);
}

TEST(DetectedTotals, MatchEnumeration) {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 3; ++n) {
    PureState input = oracles::random_qubit(rng);
    GainConfig cfg(0.7, n);
    std::vector<double> by_total(n + 2, 0.0);
    for (const auto& r : run_protocol(input, cfg)) by_total[r.total_m] += r.probability;
    auto cheap = detected_total_distribution(input, cfg);
    ASSERT_EQ(cheap.size(), by_total.size());
    for (std::size_t m = 0; m < cheap.size(); ++m) EXPECT_NEAR(cheap[m], by_total[m], 1e-12);
  }
}

}  // namespace
}  // namespace teleamp
