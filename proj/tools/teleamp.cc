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

// teleamp: command-line front end for the linear-optical teleamplifier
// simulator. Emits plot-ready CSV or JSON-lines tables.

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "cli/commands.h"
#include "cli/table.h"
#include "cli/verify.h"

namespace {

using teleamp::cli::GainGrid;

void add_grid_flags(CLI::App* cmd, GainGrid& grid) {
  cmd->add_option("--g", grid.values, "Explicit gain values (overrides the range)")
      ->delimiter(',');
  cmd->add_option("--g-min", grid.g_min, "Smallest gain")->capture_default_str();
  cmd->add_option("--g-max", grid.g_max, "Largest gain")->capture_default_str();
  cmd->add_option("--steps", grid.steps, "Number of gain points")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = teleamp::cli;

  CLI::App app{"Linear-optical noiseless linear amplifier simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::string out_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");

  cli::ProbCurveOptions prob;
  std::optional<double> c0sq;
  auto* prob_cmd = app.add_subcommand("prob-curve", "Success probability against gain");
  add_grid_flags(prob_cmd, prob.grid);
  prob_cmd->add_option("--n", prob.sizes, "Teleamplifier sizes")->delimiter(',');
  prob_cmd->add_option("--c0sq", c0sq, "Input |c0|^2 (default: worst case per gain)");

  cli::FidelityLossOptions loss;
  auto* loss_cmd = app.add_subcommand("fidelity-loss", "Fidelity by detection class under loss");
  add_grid_flags(loss_cmd, loss.grid);
  loss_cmd->add_option("--n", loss.sizes, "Teleamplifier sizes")->delimiter(',');
  loss_cmd->add_option("--alpha", loss.alpha, "Coherent amplitude")->capture_default_str();
  loss_cmd->add_option("--eta", loss.eta, "Loss transmissivity")->capture_default_str();

  cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest teleamplifier size")
      ->capture_default_str();
  verify_cmd->add_option("--g", verify.gains, "Gains to check")->delimiter(',');
  verify_cmd->add_option("--seed", verify.seed, "Seed for random inputs")
      ->capture_default_str();
  verify_cmd->add_flag("--inject-omega-flip", verify.inject_omega_flip,
                       "Mutation check: conjugate omega in the phase relation");

  cli::ResourceStateOptions resource;
  auto* resource_cmd =
      app.add_subcommand("resource-state", "Resource state amplitudes and synthesis check");
  resource_cmd->add_option("--n", resource.size, "Teleamplifier size")->capture_default_str();
  resource_cmd->add_option("--g", resource.gain, "Gain")->capture_default_str();

  cli::MultiphotonOptions multi;
  std::optional<int> multi_n;
  auto* multi_cmd = app.add_subcommand("multiphoton", "Multi-rail amplification of |alpha>");
  multi_cmd->add_option("--alpha", multi.alpha, "Coherent amplitude")->capture_default_str();
  multi_cmd->add_option("--rails", multi.rails, "Number of rails r")->capture_default_str();
  multi_cmd->add_option("--g", multi.gain, "Gain")->capture_default_str();
  multi_cmd->add_option("--n", multi_n, "Per-rail size (default: n -> infinity)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }
  prob.c0sq = c0sq;
  multi.size = multi_n;

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return cli::kExitUsage;
    }
  }
  std::ostream& os = out_path.empty() ? std::cout : file;

  cli::RunManifest manifest;
  manifest.format = cli::parse_format(format);
  manifest.output_path = out_path;
  cli::TableWriter writer(os, manifest.format);

  try {
    if (prob_cmd->parsed()) return cli::cmd_prob_curve(prob, manifest, writer);
    if (loss_cmd->parsed()) return cli::cmd_fidelity_loss(loss, manifest, writer);
    if (verify_cmd->parsed()) return cli::cmd_verify(verify, manifest, writer);
    if (resource_cmd->parsed()) return cli::cmd_resource_state(resource, manifest, writer);
    if (multi_cmd->parsed()) return cli::cmd_multiphoton(multi, manifest, writer);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
  return cli::kExitUsage;
}
