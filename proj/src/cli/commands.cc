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

#include "cli/commands.h"

#include <cmath>

#include "teleamp/lossy.h"
#include "teleamp/multiphoton.h"
#include "teleamp/protocol.h"
#include "teleamp/statesynth.h"

namespace teleamp::cli {

namespace {

void check_sizes(const std::vector<int>& sizes, int max_size) {
  if (sizes.empty()) throw UsageError("at least one size --n is required");
  for (int n : sizes) {
    if (n < 1 || n > max_size) {
      throw UsageError("size n must lie in [1, " + std::to_string(max_size) + "]");
    }
  }
}

nlohmann::ordered_json grid_json(const GainGrid& grid) {
  nlohmann::ordered_json j;
  if (!grid.values.empty()) {
    j["g"] = grid.values;
  } else {
    j["g_min"] = grid.g_min;
    j["g_max"] = grid.g_max;
    j["steps"] = grid.steps;
  }
  return j;
}

std::string suffix(int n) { return "_n" + std::to_string(n); }

Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell(*v) : Cell(std::monostate{});
}

}  // namespace

std::vector<double> GainGrid::points() const {
  std::vector<double> out;
  if (!values.empty()) {
    out = values;
  } else {
    if (steps < 2) throw UsageError("--steps must be at least 2");
    if (!(g_max > g_min)) throw UsageError("--g-max must exceed --g-min");
    for (int i = 0; i < steps; ++i) {
      out.push_back(g_min + (g_max - g_min) * i / (steps - 1));
    }
  }
  for (double& g : out) {
    if (!(g > 0.0) || !std::isfinite(g)) throw UsageError("gains must be positive");
    if (std::abs(g - 1.0) <= 1e-12) g = 1.0;
  }
  return out;
}

int cmd_prob_curve(const ProbCurveOptions& opts, RunManifest manifest, TableWriter& out) {
  const std::vector<double> gains = opts.grid.points();
  check_sizes(opts.sizes, 1000);
  if (opts.c0sq && !(*opts.c0sq >= 0.0 && *opts.c0sq <= 1.0)) {
    throw UsageError("--c0sq must lie in [0, 1]");
  }

  manifest.command = "prob-curve";
  manifest.parameters = grid_json(opts.grid);
  manifest.parameters["n"] = opts.sizes;
  manifest.parameters["c0sq"] =
      opts.c0sq ? nlohmann::ordered_json(*opts.c0sq) : nlohmann::ordered_json("worst-case");
  out.manifest(manifest);

  std::vector<std::string> columns{"g", "c0sq", "P_bound"};
  for (int n : opts.sizes) columns.push_back("P_success" + suffix(n));
  out.begin_table("success_probability", columns);
  for (double g : gains) {
    const double c0sq = opts.c0sq ? *opts.c0sq : worst_case_c0sq(g);
    std::vector<Cell> row{g, c0sq, probability_bound(g)};
    for (int n : opts.sizes) row.emplace_back(success_probability(c0sq, GainConfig(g, n)));
    out.row(row);
  }
  return kExitOk;
}

int cmd_fidelity_loss(const FidelityLossOptions& opts, RunManifest manifest,
                      TableWriter& out) {
  const std::vector<double> gains = opts.grid.points();
  check_sizes(opts.sizes, 3);
  if (!(opts.eta > 0.0 && opts.eta <= 1.0)) throw UsageError("--eta must lie in (0, 1]");
  const LossSpec spec(opts.eta);

  manifest.command = "fidelity-loss";
  manifest.parameters = grid_json(opts.grid);
  manifest.parameters["n"] = opts.sizes;
  manifest.parameters["alpha"] = opts.alpha;
  manifest.parameters["eta"] = opts.eta;
  out.manifest(manifest);

  std::vector<std::string> columns{"g"};
  for (int n : opts.sizes) {
    for (const char* name : {"F_single", "P_single", "Q_single", "F_bunched", "P_bunched",
                             "Q_bunched", "P_success"}) {
      columns.push_back(name + suffix(n));
    }
  }
  columns.push_back("F_cutoff_ceiling");
  out.begin_table("fidelity_by_detection_class", columns);
  for (double g : gains) {
    std::vector<Cell> row{g};
    for (int n : opts.sizes) {
      LossyReport rep = lossy_protocol_run(opts.alpha, GainConfig(g, n), spec);
      row.push_back(optional_cell(rep.single_photon.fidelity));
      row.emplace_back(rep.single_photon.probability);
      row.emplace_back(rep.single_photon.herald_fraction);
      row.push_back(optional_cell(rep.bunched_pair.fidelity));
      row.emplace_back(rep.bunched_pair.probability);
      row.emplace_back(rep.bunched_pair.herald_fraction);
      row.emplace_back(rep.success_probability);
    }
    row.emplace_back(cutoff_ceiling(opts.alpha, g));
    out.row(row);
  }
  return kExitOk;
}

int cmd_resource_state(const ResourceStateOptions& opts, RunManifest manifest,
                       TableWriter& out) {
  if (opts.size < 1 || opts.size > 8) throw UsageError("--n must lie in [1, 8]");
  if (!(opts.gain > 0.0)) throw UsageError("--g must be positive");
  const GainConfig cfg(opts.gain, opts.size);

  manifest.command = "resource-state";
  manifest.parameters["n"] = opts.size;
  manifest.parameters["g"] = opts.gain;
  out.manifest(manifest);

  const PureState target = resource_state(cfg);
  out.begin_table("resource_amplitudes", {"occupation", "re", "im"});
  for (const auto& [occ, amp] : target.amplitudes()) {
    out.row({occ.label(), amp.real(), amp.imag()});
  }
  const SynthesisResult synth = synthesize_resource(cfg);
  out.begin_table("synthesis_check",
                  {"n", "g", "normalization", "fidelity", "physical_success_probability"});
  out.row({static_cast<long long>(opts.size), opts.gain, normalization_factor(cfg),
           fidelity_pure(target, synth.state), synth.physical_success_probability});
  return kExitOk;
}

int cmd_multiphoton(const MultiphotonOptions& opts, RunManifest manifest, TableWriter& out) {
  if (opts.rails < 1 || opts.rails > 8) throw UsageError("--rails must lie in [1, 8]");
  if (!(opts.gain > 0.0)) throw UsageError("--g must be positive");
  if (opts.size && (*opts.size < 1 || *opts.size > 4)) {
    throw UsageError("--n must lie in [1, 4]");
  }

  manifest.command = "multiphoton";
  manifest.parameters["alpha"] = opts.alpha;
  manifest.parameters["rails"] = opts.rails;
  manifest.parameters["g"] = opts.gain;
  manifest.parameters["n"] =
      opts.size ? nlohmann::ordered_json(*opts.size) : nlohmann::ordered_json("infinity");
  out.manifest(manifest);

  // Coherent amplitudes alpha^j / sqrt(j!) up to j = rails, renormalized.
  std::vector<Complex> amps;
  Complex term(1.0, 0.0);
  for (int j = 0; j <= opts.rails; ++j) {
    if (j > 0) term *= opts.alpha / std::sqrt(static_cast<double>(j));
    amps.push_back(term);
  }
  const PureState input = normalize(PureState::single_mode(amps)).state;
  const MultiRailConfig mc{opts.rails, opts.gain, opts.size, opts.rails};
  const MultiphotonResult res = multiphoton_amplify(input, mc);

  out.begin_table("distortions", {"j", "c_in", "out_re", "out_im", "d_re", "d_im"});
  for (const auto& [occ, c] : input.amplitudes()) {
    const int j = occ[0];
    const Complex o = res.output.empty() ? Complex() : res.output.amplitude(occ);
    auto d = res.distortions.find(j);
    out.row({static_cast<long long>(j), c.real(), o.real(), o.imag(),
             d == res.distortions.end() ? Cell() : Cell(d->second.real()),
             d == res.distortions.end() ? Cell() : Cell(d->second.imag())});
  }
  const double r = opts.rails;
  out.begin_table("success_probability",
                  {"rails", "g", "probability", "worst_case_probability", "g_pow_minus_2r",
                   "one_plus_g2_pow_minus_r"});
  out.row({static_cast<long long>(opts.rails), opts.gain, res.probability,
           res.worst_case_probability, std::pow(opts.gain, -2.0 * r),
           std::pow(1.0 + opts.gain * opts.gain, -r)});
  return kExitOk;
}

}  // namespace teleamp::cli
