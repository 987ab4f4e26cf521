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

#include <optional>
#include <string>
#include <vector>

#include "qnb/measures.hpp"

namespace qnb {

enum class StateFamily { isotropic, werner };

/// One grid point of a family sweep: rho(x) paired with itself, f_min
/// measured on side a. bound_thm2 is absent when rho^b is degenerate.
struct SweepRow {
  double x = 0.0;
  double f_min = 0.0;
  double nonbilocal = 0.0;
  double bound_thm1 = 0.0;
  std::optional<double> bound_thm2;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// Largest certification gap seen across all per-point optimizations.
  double max_certified_gap = 0.0;
};

/// Evaluates the sweep grid. Points run concurrently; per-point seeds are
/// derived from (config.seed, point index), so the rows do not depend on
/// scheduling.
SweepResult sweep(StateFamily family, int m, double x_min, double x_max, int steps,
                  const OptimizerConfig& config = {},
                  FeasibleSet feasible = FeasibleSet::general);

/// First violated SweepRow inequality (measure ordering or bound domination),
/// or nullopt if all rows are consistent.
std::optional<std::string> sweep_violation(const std::vector<SweepRow>& rows);

}  // namespace qnb
