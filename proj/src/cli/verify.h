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

#ifndef TELEAMP_CLI_VERIFY_H_
#define TELEAMP_CLI_VERIFY_H_

#include <string>
#include <vector>

#include "cli/table.h"

namespace teleamp::cli {

struct VerifyOptions {
  int max_n = 4;
  std::vector<double> gains{0.5, 1.0, 1.4142135623730951, 2.0};
  unsigned long long seed = 20260101;
  int random_inputs = 5;
  /// Mutation check: evaluate the phase relation with omega conjugated.
  /// The phase-relation suite must then fail.
  bool inject_omega_flip = false;
};

struct CheckResult {
  std::string suite;
  int n = 0;
  int m = -1;       // -1 when not applicable
  double gain = 0;  // 0 when not applicable
  long long cases = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  bool suite_passed(const std::string& suite) const;
};

VerifyReport check_permanent_oracle(unsigned long long seed);
VerifyReport check_phase_relation(int max_n, bool flip_omega);
VerifyReport check_enumeration(int max_n, const std::vector<double>& gains,
                               unsigned long long seed, int random_inputs);
VerifyReport check_synthesis(int max_n, const std::vector<double>& gains);

VerifyReport run_verify(const VerifyOptions& opts);

int cmd_verify(const VerifyOptions& opts, RunManifest manifest, TableWriter& out);

}  // namespace teleamp::cli

#endif  // TELEAMP_CLI_VERIFY_H_
