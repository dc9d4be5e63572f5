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

#include "cli/verify.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cli/commands.h"
#include "teleamp/interferometer.h"
#include "teleamp/oracles.h"
#include "teleamp/protocol.h"
#include "teleamp/statesynth.h"

namespace teleamp::cli {

namespace {

constexpr double kPermanentTol = 1e-12;
constexpr double kPhaseTol = 1e-10;
constexpr double kProbabilityTol = 1e-10;
constexpr double kOutputFidelityTol = 1e-12;
constexpr double kSynthesisTol = 1e-10;

// |1>^count |0>^(modes - count), optionally shifted right by one mode.
OccupationVector ones(std::size_t modes, int count, int offset) {
  std::vector<int> c(modes, 0);
  for (int k = 0; k < count; ++k) c[offset + k] = 1;
  return OccupationVector(std::move(c));
}

void append(VerifyReport& into, VerifyReport&& from) {
  for (CheckResult& c : from.checks) into.checks.push_back(std::move(c));
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool VerifyReport::suite_passed(const std::string& suite) const {
  return std::all_of(checks.begin(), checks.end(), [&](const CheckResult& c) {
    return c.suite != suite || c.passed;
  });
}

VerifyReport check_permanent_oracle(unsigned long long seed) {
  std::mt19937_64 rng(seed);
  VerifyReport report;
  for (int dim = 1; dim <= 6; ++dim) {
    CheckResult res{"permanent_oracle", dim, -1, 0.0, 0, 0.0, kPermanentTol, true};
    for (int trial = 0; trial < 17; ++trial) {
      ComplexMatrix m = oracles::random_matrix(rng, dim);
      Complex expected = oracles::naive_permanent(m);
      double err = std::abs(permanent(m) - expected) / std::max(std::abs(expected), 1e-300);
      res.max_error = std::max(res.max_error, err);
      ++res.cases;
    }
    res.passed = res.max_error <= res.tolerance;
    report.checks.push_back(res);
  }
  return report;
}

VerifyReport check_phase_relation(int max_n, bool flip_omega) {
  VerifyReport report;
  for (int n = 1; n <= max_n; ++n) {
    const ScatteringMatrix s = qft_splitter(n + 1);
    const std::size_t modes = n + 1;
    for (int m = 1; m <= n; ++m) {
      CheckResult res{"phase_relation", n, m, 0.0, 0, 0.0, kPhaseTol, true};
      const OccupationVector shifted = ones(modes, m, 1);
      const OccupationVector leading = ones(modes, m, 0);
      for (const OccupationVector& pattern : weak_compositions(m, modes)) {
        Complex omega_f = root_of_unity(n + 1, phase_exponent(pattern));
        if (flip_omega) omega_f = std::conj(omega_f);
        const Complex lhs = scattering_amplitude(s, shifted, pattern);
        const Complex rhs = omega_f * scattering_amplitude(s, leading, pattern);
        res.max_error = std::max(res.max_error, std::abs(lhs - rhs));
        ++res.cases;
      }
      res.passed = res.max_error <= res.tolerance;
      report.checks.push_back(res);
    }
  }
  return report;
}

VerifyReport check_enumeration(int max_n, const std::vector<double>& gains,
                               unsigned long long seed, int random_inputs) {
  std::mt19937_64 rng(seed);
  VerifyReport report;
  for (int n = 1; n <= max_n; ++n) {
    for (double g : gains) {
      const GainConfig cfg(g, n);
      CheckResult prob{"enumeration_vs_closed_form", n, -1, g, 0, 0.0, kProbabilityTol, true};
      CheckResult fid{"success_output_fidelity", n, -1, g, 0, 0.0, kOutputFidelityTol, true};
      std::vector<PureState> inputs{PureState::single_mode({1.0}),
                                    PureState::single_mode({0.0, 1.0})};
      for (int k = 0; k < random_inputs; ++k) inputs.push_back(oracles::random_qubit(rng));
      for (const PureState& input : inputs) {
        const PureState target = amplified_qubit(input, g);
        double total = 0.0, success = 0.0, vacuum = 0.0, saturated = 0.0;
        for (const OutcomeRecord& rec : run_protocol(input, cfg)) {
          total += rec.probability;
          switch (rec.classification) {
            case OutcomeClass::kSuccess:
              success += rec.probability;
              break;
            case OutcomeClass::kFailVacuum:
              vacuum += rec.probability;
              break;
            case OutcomeClass::kFailSaturated:
              saturated += rec.probability;
              break;
          }
          if (rec.output) {
            fid.max_error = std::max(fid.max_error, std::abs(1.0 - fidelity_pure(*rec.output, target)));
            ++fid.cases;
          }
        }
        for (double err : {std::abs(total - 1.0),
                           std::abs(success - success_probability(input, cfg)),
                           std::abs(vacuum - prob_fail_vacuum(input, cfg)),
                           std::abs(saturated - prob_fail_saturated(input, cfg))}) {
          prob.max_error = std::max(prob.max_error, err);
        }
        ++prob.cases;
      }
      prob.passed = prob.max_error <= prob.tolerance;
      fid.passed = fid.max_error <= fid.tolerance;
      report.checks.push_back(prob);
      report.checks.push_back(fid);
    }
  }
  return report;
}

VerifyReport check_synthesis(int max_n, const std::vector<double>& gains) {
  VerifyReport report;
  for (int n = 1; n <= max_n; ++n) {
    for (double g : gains) {
      const GainConfig cfg(g, n);
      const SynthesisResult synth = synthesize_resource(cfg);
      CheckResult res{"synthesis_equality", n, -1, g, 1, 0.0, kSynthesisTol, true};
      res.max_error = std::abs(1.0 - fidelity_pure(synth.state, resource_state(cfg)));
      const double expected_p = std::pow(16.0, -(n - 1));
      res.passed = res.max_error <= res.tolerance &&
                   std::abs(synth.physical_success_probability - expected_p) <= 1e-15;
      report.checks.push_back(res);
    }
  }
  return report;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport report;
  append(report, check_permanent_oracle(opts.seed));
  append(report, check_phase_relation(opts.max_n, opts.inject_omega_flip));
  append(report, check_enumeration(opts.max_n, opts.gains, opts.seed, opts.random_inputs));
  append(report, check_synthesis(opts.max_n, opts.gains));
  return report;
}

int cmd_verify(const VerifyOptions& opts, RunManifest manifest, TableWriter& out) {
  if (opts.max_n < 1 || opts.max_n > 5) throw UsageError("--max-n must lie in [1, 5]");
  if (opts.gains.empty()) throw UsageError("at least one gain is required");
  for (double g : opts.gains) {
    if (!(g > 0.0)) throw UsageError("gains must be positive");
  }
  manifest.command = "verify";
  manifest.seed = opts.seed;
  manifest.parameters["max_n"] = opts.max_n;
  manifest.parameters["g"] = opts.gains;
  manifest.parameters["random_inputs"] = opts.random_inputs;
  manifest.parameters["inject_omega_flip"] = opts.inject_omega_flip;
  out.manifest(manifest);

  const VerifyReport report = run_verify(opts);
  out.begin_table("checks", {"suite", "n", "m", "g", "cases", "max_error", "tolerance",
                             "status"});
  for (const CheckResult& c : report.checks) {
    out.row({c.suite, static_cast<long long>(c.n),
              c.m < 0 ? Cell() : Cell(static_cast<long long>(c.m)),
              c.gain > 0 ? Cell(c.gain) : Cell(), c.cases, c.max_error, c.tolerance,
              std::string(c.passed ? "pass" : "FAIL")});
  }
  out.begin_table("summary", {"checks", "failed", "status"});
  const long long failed = std::count_if(report.checks.begin(), report.checks.end(),
                                         [](const CheckResult& c) { return !c.passed; });
  out.row({static_cast<long long>(report.checks.size()), failed,
           std::string(failed == 0 ? "pass" : "FAIL")});
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace teleamp::cli
