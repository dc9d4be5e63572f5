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

#ifndef TELEAMP_CLI_COMMANDS_H_
#define TELEAMP_CLI_COMMANDS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/table.h"

namespace teleamp::cli {

/// Invalid parameter combination; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Either an explicit gain list or an inclusive linear range.
struct GainGrid {
  std::vector<double> values;
  double g_min = 0.1;
  double g_max = 3.0;
  int steps = 30;

  /// Explicit values when given, else the range. Points within 1e-12 of 1
  /// snap to exactly 1 so the teleportation branches are taken.
  std::vector<double> points() const;
};

struct ProbCurveOptions {
  GainGrid grid;
  std::vector<int> sizes{1, 2, 3, 4, 5};
  /// Fixed |c0|^2; empty selects the worst-case input per gain.
  std::optional<double> c0sq;
};

struct FidelityLossOptions {
  GainGrid grid{{}, 1.0, 3.0, 9};
  std::vector<int> sizes{1, 2};
  double alpha = 0.1;
  double eta = 0.7;
};

struct ResourceStateOptions {
  int size = 2;
  double gain = 1.4142135623730951;
};

struct MultiphotonOptions {
  double alpha = 0.5;
  int rails = 4;
  double gain = 1.4142135623730951;
  /// Teleamplifier size per rail; empty for the n -> infinity rail map.
  std::optional<int> size;
};

int cmd_prob_curve(const ProbCurveOptions& opts, RunManifest manifest, TableWriter& out);
int cmd_fidelity_loss(const FidelityLossOptions& opts, RunManifest manifest,
                      TableWriter& out);
int cmd_resource_state(const ResourceStateOptions& opts, RunManifest manifest,
                       TableWriter& out);
int cmd_multiphoton(const MultiphotonOptions& opts, RunManifest manifest, TableWriter& out);

}  // namespace teleamp::cli

#endif  // TELEAMP_CLI_COMMANDS_H_
