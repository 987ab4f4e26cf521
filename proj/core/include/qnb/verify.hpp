// Copyright 2026 The qnb authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qnb {

enum class VerifySuite {
  pure_closed_form,
  ordering,
  bounds,
  ancilla,
  cq_zero,
  superactivation_search,
};

const char* verify_suite_name(VerifySuite suite);

/// Parses the CLI spelling ("pure-closed-form", ...); throws RangeError on
/// unknown names.
VerifySuite parse_verify_suite(const std::string& name);

struct VerifyTrial {
  bool pass = true;
  double violation = 0.0;  // worst-case magnitude for this trial
  std::string detail;
};

struct VerifyOutcome {
  VerifySuite suite;
  std::vector<VerifyTrial> trials;
  bool all_pass = true;
  double worst_violation = 0.0;
  /// For the search suites: instances found, not failures.
  int findings = 0;
};

/// Runs one verification suite. superactivation_search reports findings and
/// never fails; every other suite fails when a trial violates its tolerance.
VerifyOutcome run_verify_suite(VerifySuite suite, int trials, std::uint64_t seed);

}  // namespace qnb
