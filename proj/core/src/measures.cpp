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

#include "qnb/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qnb/indexing.hpp"

namespace qnb {

namespace {

/// Optimizer must not end up more than this much worse than the sampling
/// oracle, else the run is declared unconverged.
constexpr double kCertifyGuard = 1e-6;

double clamp_unit(double v) {
  if (v < -1e-9 || v > 1.0 + 1e-9) {
    std::ostringstream oss;
    oss << "measure value " << v << " escaped [0, 1]";
    throw Error(oss.str());
  }
  return std::clamp(v, 0.0, 1.0);
}

struct DescentOutcome {
  double value = 0.0;
  int iterations = 0;
};

/// Plain gradient descent with central differences and a backtracking line
/// search; stops when the objective has not improved by step_tolerance for
/// stall_window iterations.
DescentOutcome descend(const std::function<double(const RealVector&)>& f, RealVector p,
                       const OptimizerConfig& cfg) {
  double fp = f(p);
  double watermark = fp;
  int since_improvement = 0;
  double step = 0.5;
  const int n = static_cast<int>(p.size());
  RealVector grad(n), trial(n);

  int it = 0;
  for (; it < cfg.max_iters; ++it) {
    for (int i = 0; i < n; ++i) {
      const double save = p(i);
      p(i) = save + cfg.fd_step;
      const double f_plus = f(p);
      p(i) = save - cfg.fd_step;
      const double f_minus = f(p);
      p(i) = save;
      grad(i) = (f_plus - f_minus) / (2.0 * cfg.fd_step);
    }
    const double gnorm2 = grad.squaredNorm();
    // below this the achievable improvement is under the stall threshold
    if (gnorm2 < 1e-18) break;

    bool accepted = false;
    double t = step;
    for (int ls = 0; ls < 40; ++ls) {
      trial = p - t * grad;
      const double ft = f(trial);
      if (ft <= fp - 1e-4 * t * gnorm2) {
        p = trial;
        fp = ft;
        step = 2.0 * t;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) step = std::max(0.5 * step, 1e-12);

    if (fp < watermark - cfg.step_tolerance) {
      watermark = fp;
      since_improvement = 0;
    } else if (++since_improvement >= cfg.stall_window) {
      ++it;
      break;
    }
  }
  return {fp, it};
}

struct ExtremizeOutcome {
  double best_fidelity = 0.0;  // extremized normalized overlap
  OptimizerReport report;
  std::optional<double> certified_gap;
};

/// Extremizes Tr(rho Pi(rho))/Tr(rho^2) over the family; certifies the
/// result against the sampling oracle when a budget is configured.
ExtremizeOutcome extremize_normalized_overlap(const DensityMatrix& rho,
                                              std::span<const int> targets,
                                              const MeasurementFamily& family, Direction dir,
                                              const OptimizerConfig& cfg) {
  const OverlapObjective objective(rho, targets);

  ExtremizeOutcome out;
  out.report.block_dims = family.block_dims();

  if (!family.has_freedom()) {
    // unique invariant measurement: nothing to optimize
    out.best_fidelity = objective.normalized(family.base());
  } else {
    if (cfg.starts < 1) throw RangeError("OptimizerConfig: starts must be >= 1");
    const double sign = dir == Direction::minimize ? 1.0 : -1.0;
    auto signed_objective = [&](const RealVector& p) {
      return sign * objective.normalized(family.build(std::span(p.data(), p.size())));
    };

    const int n = family.param_count();
    double best_signed = 0.0;
    int best_iters = 0;
    bool first = true;
    for (int start = 0; start < cfg.starts; ++start) {
      RealVector p0 = RealVector::Zero(n);
      if (start > 0) {
        auto rng = seeded_rng(mix_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(start)));
        std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
        for (int i = 0; i < n; ++i) p0(i) = angle(rng);
      }
      const DescentOutcome d = descend(signed_objective, std::move(p0), cfg);
      if (first || d.value < best_signed) {
        best_signed = d.value;
        best_iters = d.iterations;
        first = false;
      }
    }
    out.best_fidelity = sign * best_signed;
    out.report.starts = cfg.starts;
    out.report.iterations = best_iters;
    out.report.optimized = true;
  }
  out.report.best_objective = out.best_fidelity;

  if (cfg.certify_samples > 0) {
    const OracleReport oracle = sampled_extremum(
        [&](const ProjectiveMeasurement& m) { return objective.normalized(m); }, family,
        cfg.certify_samples, mix_seed(cfg.seed, 0x0417ac1eULL), dir);
    const double gap = dir == Direction::minimize ? out.best_fidelity - oracle.best_value
                                                  : oracle.best_value - out.best_fidelity;
    if (gap > kCertifyGuard) {
      std::ostringstream oss;
      oss << "optimizer extremum " << out.best_fidelity << " trails the sampling oracle ("
          << oracle.best_value << ") by " << gap;
      throw ConvergenceError(oss.str());
    }
    out.certified_gap = gap;
  }
  return out;
}

void require_bipartite(const DensityMatrix& rho, const char* who) {
  if (rho.subsystems() != 2) {
    throw DimensionError(std::string(who) + ": state must be bipartite");
  }
}

MeasurementFamily single_marginal_family(const DensityMatrix& rho, int measured_subsystem,
                                         const OptimizerConfig& cfg) {
  if (measured_subsystem != 0 && measured_subsystem != 1) {
    throw IndexError("measured subsystem must be 0 or 1");
  }
  const int keep[] = {measured_subsystem};
  auto [base, structure] = eigenmeasurement(partial_trace(rho, keep), cfg.degeneracy_tolerance);
  return MeasurementFamily::general(std::move(base), std::move(structure));
}

}  // namespace

double purity(const DensityMatrix& rho) {
  return rho.matrix().squaredNorm();  // Tr(rho^2) for Hermitian rho
}

double fidelity_alt(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("fidelity_alt: dimension mismatch");
  // Tr(rho sigma) for Hermitian operands
  const double cross = rho.matrix().cwiseProduct(sigma.matrix().conjugate()).sum().real();
  return (cross * cross) / (purity(rho) * purity(sigma));
}

OverlapObjective::OverlapObjective(const DensityMatrix& rho, std::span<const int> targets) {
  const auto& dims = rho.dims();
  std::vector<int> tgt(targets.begin(), targets.end());
  std::sort(tgt.begin(), tgt.end());
  std::vector<int> rest, tgt_dims, rest_dims;
  for (int k = 0; k < rho.subsystems(); ++k) {
    if (std::binary_search(tgt.begin(), tgt.end(), k)) {
      tgt_dims.push_back(dims[k]);
    } else {
      rest.push_back(k);
      rest_dims.push_back(dims[k]);
    }
  }
  const int dt = dims_product(tgt_dims);
  const int dr = dims_product(rest_dims);
  target_dim_ = dt;
  purity_ = rho.matrix().squaredNorm();

  auto compose = [&](int t, int r) {
    const auto td = unravel_index(t, tgt_dims);
    const auto rd = unravel_index(r, rest_dims);
    std::vector<int> full(dims.size());
    for (std::size_t q = 0; q < tgt.size(); ++q) full[tgt[q]] = td[q];
    for (std::size_t q = 0; q < rest.size(); ++q) full[rest[q]] = rd[q];
    return ravel_index(full, dims);
  };

  compressed_.resize(dr * dr, dt * dt);
  for (int t = 0; t < dt; ++t)
    for (int tp = 0; tp < dt; ++tp)
      for (int r = 0; r < dr; ++r)
        for (int rp = 0; rp < dr; ++rp)
          compressed_(r * dr + rp, t * dt + tp) = rho.matrix()(compose(t, r), compose(tp, rp));
}

double OverlapObjective::overlap(const ProjectiveMeasurement& m) const {
  if (m.dim() != target_dim_) throw DimensionError("OverlapObjective: measurement size mismatch");
  const int dt = target_dim_;
  ComplexVector coeff(dt * dt);
  double acc = 0.0;
  for (int k = 0; k < m.outcomes(); ++k) {
    const auto w = m.basis().col(k);
    for (int t = 0; t < dt; ++t)
      for (int tp = 0; tp < dt; ++tp) coeff(t * dt + tp) = std::conj(w(t)) * w(tp);
    // Tr(S_k^2) with S_k the compression of rho along direction w
    acc += (compressed_ * coeff).squaredNorm();
  }
  return acc;
}

double measurement_overlap(const DensityMatrix& rho, const ProjectiveMeasurement& m,
                           std::span<const int> targets) {
  const DensityMatrix post = apply_measurement(rho, m, targets);
  return rho.matrix().cwiseProduct(post.matrix().conjugate()).sum().real();
}

MeasureResult hs_min(const DensityMatrix& rho, int measured_subsystem,
                     const OptimizerConfig& config) {
  require_bipartite(rho, "hs_min");
  const int targets[] = {measured_subsystem};
  const MeasurementFamily family = single_marginal_family(rho, measured_subsystem, config);
  ExtremizeOutcome ex =
      extremize_normalized_overlap(rho, targets, family, Direction::minimize, config);
  MeasureResult res;
  res.value = clamp_unit(purity(rho) * (1.0 - ex.best_fidelity));
  res.report = std::move(ex.report);
  res.certified_gap = ex.certified_gap;
  return res;
}

MeasureResult geometric_discord_restricted(const DensityMatrix& rho, int measured_subsystem,
                                           const OptimizerConfig& config) {
  require_bipartite(rho, "geometric_discord_restricted");
  const int targets[] = {measured_subsystem};
  const MeasurementFamily family = single_marginal_family(rho, measured_subsystem, config);
  ExtremizeOutcome ex =
      extremize_normalized_overlap(rho, targets, family, Direction::maximize, config);
  MeasureResult res;
  res.value = clamp_unit(purity(rho) * (1.0 - ex.best_fidelity));
  res.report = std::move(ex.report);
  res.certified_gap = ex.certified_gap;
  return res;
}

MeasureResult f_min(const DensityMatrix& rho, int measured_subsystem,
                    const OptimizerConfig& config) {
  require_bipartite(rho, "f_min");
  const int targets[] = {measured_subsystem};
  const MeasurementFamily family = single_marginal_family(rho, measured_subsystem, config);
  ExtremizeOutcome ex =
      extremize_normalized_overlap(rho, targets, family, Direction::minimize, config);
  MeasureResult res;
  res.value = clamp_unit(1.0 - ex.best_fidelity);
  res.report = std::move(ex.report);
  res.certified_gap = ex.certified_gap;
  return res;
}

MeasureResult nonbilocal(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd,
                         const OptimizerConfig& config, FeasibleSet feasible) {
  require_bipartite(rho_ab, "nonbilocal");
  require_bipartite(rho_cd, "nonbilocal");

  const DensityMatrix joint = kron(rho_ab, rho_cd);
  const int targets[] = {1, 2};

  const int keep_b[] = {1};
  const int keep_c[] = {0};
  const DensityMatrix marginal_b = partial_trace(rho_ab, keep_b);
  const DensityMatrix marginal_c = partial_trace(rho_cd, keep_c);

  MeasurementFamily family = [&] {
    if (feasible == FeasibleSet::product) {
      auto [base_b, st_b] = eigenmeasurement(marginal_b, config.degeneracy_tolerance);
      auto [base_c, st_c] = eigenmeasurement(marginal_c, config.degeneracy_tolerance);
      return MeasurementFamily::product(std::move(base_b), std::move(st_b), std::move(base_c),
                                        std::move(st_c));
    }
    auto [base, st] =
        eigenmeasurement(kron(marginal_b, marginal_c), config.degeneracy_tolerance);
    return MeasurementFamily::general(std::move(base), std::move(st));
  }();

  ExtremizeOutcome ex =
      extremize_normalized_overlap(joint, targets, family, Direction::minimize, config);
  MeasureResult res;
  res.value = clamp_unit(1.0 - ex.best_fidelity);
  res.report = std::move(ex.report);
  res.certified_gap = ex.certified_gap;
  return res;
}

namespace {

double fourth_power_sum(std::span<const double> s, const char* who) {
  double norm = 0.0, fourth = 0.0;
  for (double v : s) {
    norm += v * v;
    fourth += v * v * v * v;
  }
  if (std::abs(norm - 1.0) > 1e-8) {
    throw RangeError(std::string(who) + ": amplitudes must satisfy sum s_i^2 = 1");
  }
  return fourth;
}

}  // namespace

double nonbilocal_pure_closed_form(std::span<const double> s, std::span<const double> r) {
  return 1.0 - fourth_power_sum(s, "nonbilocal_pure_closed_form") *
                   fourth_power_sum(r, "nonbilocal_pure_closed_form");
}

double f_min_pure_closed_form(std::span<const double> s) {
  return 1.0 - fourth_power_sum(s, "f_min_pure_closed_form");
}

}  // namespace qnb
