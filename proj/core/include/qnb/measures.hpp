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
#include <optional>
#include <span>

#include "qnb/measurement.hpp"
#include "qnb/oracle.hpp"

namespace qnb {

/// Multi-start settings for the block-unitary optimization, plus the
/// certification budget of the sampling oracle (0 disables certification).
struct OptimizerConfig {
  int starts = 32;
  int max_iters = 2000;
  double step_tolerance = 1e-10;  // objective stall threshold
  int stall_window = 50;
  std::uint64_t seed = 12345;
  double fd_step = 1e-5;  // central-difference step
  double degeneracy_tolerance = kDegeneracyTol;
  std::size_t certify_samples = 20000;
};

struct OptimizerReport {
  int starts = 0;
  double best_objective = 0.0;  // extremized normalized overlap Tr(rho Pi(rho))/Tr(rho^2)
  int iterations = 0;           // descent iterations of the winning start
  std::vector<int> block_dims;  // degeneracy blocks of the feasible set
  bool optimized = false;       // false when the invariant measurement is unique
};

struct MeasureResult {
  double value = 0.0;  // in [0, 1]
  OptimizerReport report;
  /// How much worse the optimizer's extremum is than the sampling oracle's
  /// (signed toward the optimization direction); absent when certification
  /// is disabled.
  std::optional<double> certified_gap;
};

enum class FeasibleSet { general, product };

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// (Tr rho sigma)^2 / (Tr rho^2 Tr sigma^2).
double fidelity_alt(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr(rho Pi(rho)) for a measurement on the given subsystems, evaluated via
/// partial compressions of rho; the precomputation makes repeated
/// evaluations over many measurements cheap.
class OverlapObjective {
 public:
  OverlapObjective(const DensityMatrix& rho, std::span<const int> targets);

  double overlap(const ProjectiveMeasurement& m) const;
  double normalized(const ProjectiveMeasurement& m) const { return overlap(m) / purity_; }
  double state_purity() const noexcept { return purity_; }

 private:
  Eigen::MatrixXcd compressed_;  // rows (r,r'), cols (t,t')
  double purity_ = 0.0;
  int target_dim_ = 0;
};

/// Reference evaluation of Tr(rho Pi(rho)) through apply_measurement.
double measurement_overlap(const DensityMatrix& rho, const ProjectiveMeasurement& m,
                           std::span<const int> targets);

/// max over locally invariant measurements of ||rho - Pi(rho)||^2.
MeasureResult hs_min(const DensityMatrix& rho, int measured_subsystem,
                     const OptimizerConfig& config = {});

/// min over the same feasible set of ||rho - Pi(rho)||^2.
MeasureResult geometric_discord_restricted(const DensityMatrix& rho, int measured_subsystem,
                                           const OptimizerConfig& config = {});

/// 1 - min over locally invariant measurements of the fidelity between rho
/// and its post-measurement state.
MeasureResult f_min(const DensityMatrix& rho, int measured_subsystem,
                    const OptimizerConfig& config = {});

/// Fidelity-based correlation of rho_ab ox rho_cd under measurements acting
/// jointly on the inner pair (b, c). FeasibleSet::product restricts the
/// optimization to Pi^b ox Pi^c.
MeasureResult nonbilocal(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd,
                         const OptimizerConfig& config = {},
                         FeasibleSet feasible = FeasibleSet::general);

/// 1 - (sum_i s_i^4)(sum_j r_j^4) for Schmidt amplitudes of two pure inputs.
double nonbilocal_pure_closed_form(std::span<const double> s, std::span<const double> r);

/// 1 - sum_i s_i^4.
double f_min_pure_closed_form(std::span<const double> s);

}  // namespace qnb
