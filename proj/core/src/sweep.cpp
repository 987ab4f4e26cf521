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

#include "qnb/sweep.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "qnb/bounds.hpp"
#include "qnb/indexing.hpp"
#include "qnb/states.hpp"

namespace qnb {

namespace {

constexpr double kRowTol = 1e-7;

SweepRow evaluate_point(StateFamily family, int m, double x, std::uint64_t point_seed,
                        const OptimizerConfig& config, FeasibleSet feasible, double& gap) {
  const DensityMatrix rho = family == StateFamily::isotropic ? isotropic(m, x) : werner(m, x);

  OptimizerConfig cfg_f = config;
  cfg_f.seed = mix_seed(point_seed, 1);
  OptimizerConfig cfg_nb = config;
  cfg_nb.seed = mix_seed(point_seed, 2);

  const MeasureResult fm = f_min(rho, 0, cfg_f);
  const MeasureResult nb = nonbilocal(rho, rho, cfg_nb, feasible);
  gap = std::max(fm.certified_gap.value_or(0.0), nb.certified_gap.value_or(0.0));

  SweepRow row;
  row.x = x;
  row.f_min = fm.value;
  row.nonbilocal = nb.value;
  row.bound_thm1 = bound_thm1(rho, rho).bound;
  try {
    row.bound_thm2 = bound_thm2(rho, rho, config.degeneracy_tolerance).bound;
  } catch (const DegeneracyError&) {
    row.bound_thm2 = std::nullopt;
  }
  return row;
}

}  // namespace

SweepResult sweep(StateFamily family, int m, double x_min, double x_max, int steps,
                  const OptimizerConfig& config, FeasibleSet feasible) {
  if (steps < 1) throw RangeError("sweep: need at least one grid point");
  const double lo = family == StateFamily::isotropic ? 0.0 : -1.0;
  if (x_min < lo || x_max > 1.0 || x_min > x_max) {
    throw RangeError("sweep: parameter range outside the family's domain");
  }

  SweepResult result;
  result.rows.resize(steps);
  std::vector<double> gaps(steps, 0.0);

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (int i = next.fetch_add(1); i < steps; i = next.fetch_add(1)) {
      try {
        const double x =
            steps == 1 ? x_min : x_min + (x_max - x_min) * i / static_cast<double>(steps - 1);
        const std::uint64_t point_seed = mix_seed(config.seed, static_cast<std::uint64_t>(i));
        result.rows[i] = evaluate_point(family, m, x, point_seed, config, feasible, gaps[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const unsigned hw = std::thread::hardware_concurrency();
  const int n_threads = std::max(1, std::min<int>(hw ? static_cast<int>(hw) : 1, steps));
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (double g : gaps) result.max_certified_gap = std::max(result.max_certified_gap, g);
  return result;
}

std::optional<std::string> sweep_violation(const std::vector<SweepRow>& rows) {
  for (const auto& row : rows) {
    if (row.nonbilocal < row.f_min - kRowTol) {
      std::ostringstream oss;
      oss << "x = " << row.x << ": nonbilocal " << row.nonbilocal << " < f_min " << row.f_min;
      return oss.str();
    }
    if (row.bound_thm1 < row.nonbilocal - kRowTol) {
      std::ostringstream oss;
      oss << "x = " << row.x << ": bound_thm1 " << row.bound_thm1 << " < nonbilocal "
          << row.nonbilocal;
      return oss.str();
    }
  }
  return std::nullopt;
}

}  // namespace qnb
