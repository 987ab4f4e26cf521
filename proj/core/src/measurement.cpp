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

#include "qnb/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qnb/indexing.hpp"

namespace qnb {

namespace {

constexpr double kMeasurementTol = 1e-10;

/// Hermitian generator from d^2 real coordinates: first d entries fill the
/// diagonal, the rest fill the strict upper triangle as (re, im) pairs.
ComplexMatrix hermitian_from_params(std::span<const double> p, int d) {
  ComplexMatrix h(d, d);
  for (int i = 0; i < d; ++i) h(i, i) = p[i];
  std::size_t at = static_cast<std::size_t>(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Complex v(p[at], p[at + 1]);
      at += 2;
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  return h;
}

ComplexMatrix exp_i_hermitian(const ComplexMatrix& h) {
  const int d = static_cast<int>(h.rows());
  if (d == 1) {
    ComplexMatrix u(1, 1);
    u(0, 0) = std::exp(Complex(0.0, h(0, 0).real()));
    return u;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  ComplexVector phases(d);
  for (int k = 0; k < d; ++k) phases(k) = std::exp(Complex(0.0, es.eigenvalues()(k)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

bool projector_less(const ComplexMatrix& a, const ComplexMatrix& b) {
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      if (a(r, c).real() != b(r, c).real()) return a(r, c).real() < b(r, c).real();
      if (a(r, c).imag() != b(r, c).imag()) return a(r, c).imag() < b(r, c).imag();
    }
  return false;
}

}  // namespace

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<int> subsystem_dims, ComplexMatrix basis)
    : subsystem_dims_(std::move(subsystem_dims)), basis_(std::move(basis)) {
  if (basis_.rows() != basis_.cols() || basis_.rows() != dims_product(subsystem_dims_)) {
    throw DimensionError("ProjectiveMeasurement: basis must be square over the subsystem dims");
  }
  const double defect = orthonormality_defect();
  if (defect > kMeasurementTol) {
    std::ostringstream oss;
    oss << "ProjectiveMeasurement: projector set not complete/orthogonal, defect = " << defect;
    throw ValidationError("non-hermitian", defect, oss.str());
  }
}

std::vector<ComplexMatrix> ProjectiveMeasurement::projectors() const {
  std::vector<ComplexMatrix> out;
  out.reserve(outcomes());
  for (int k = 0; k < outcomes(); ++k) out.push_back(projector(k));
  return out;
}

double ProjectiveMeasurement::orthonormality_defect() const {
  return (basis_.adjoint() * basis_ - ComplexMatrix::Identity(basis_.cols(), basis_.cols()))
      .cwiseAbs()
      .maxCoeff();
}

int param_count(const DegeneracyStructure& structure) {
  int n = 0;
  for (int d : structure.block_dims) n += d * d;
  return n;
}

std::pair<ProjectiveMeasurement, DegeneracyStructure> eigenmeasurement(
    const DensityMatrix& marginal, double tolerance) {
  const int d = marginal.dim();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(marginal.matrix());

  // descending eigenvalue order
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return es.eigenvalues()(a) > es.eigenvalues()(b); });

  RealVector evals(d);
  ComplexMatrix basis(d, d);
  for (int k = 0; k < d; ++k) {
    evals(k) = es.eigenvalues()(order[k]);
    basis.col(k) = es.eigenvectors().col(order[k]);
  }

  // group at the relative tolerance; a spectrum whose whole range is below
  // the tolerance is one block (maximally mixed marginals)
  const double range = evals(0) - evals(d - 1);
  const double gap_tol = (range <= tolerance) ? tolerance : tolerance * range;

  DegeneracyStructure structure;
  structure.tolerance = gap_tol;
  int start = 0;
  for (int k = 1; k <= d; ++k) {
    if (k == d || evals(k - 1) - evals(k) > gap_tol) {
      std::vector<int> block(k - start);
      std::iota(block.begin(), block.end(), start);
      structure.block_dims.push_back(k - start);
      structure.blocks.push_back(std::move(block));
      start = k;
    }
  }

  // canonical order inside exact-tie blocks: lexicographic projector entries
  for (const auto& block : structure.blocks) {
    if (block.size() < 2) continue;
    std::vector<int> idx(block.begin(), block.end());
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return projector_less(basis.col(a) * basis.col(a).adjoint(),
                            basis.col(b) * basis.col(b).adjoint());
    });
    ComplexMatrix cols(d, static_cast<int>(block.size()));
    RealVector vals(static_cast<int>(block.size()));
    for (std::size_t q = 0; q < idx.size(); ++q) {
      cols.col(static_cast<int>(q)) = basis.col(idx[q]);
      vals(static_cast<int>(q)) = evals(idx[q]);
    }
    for (std::size_t q = 0; q < block.size(); ++q) {
      basis.col(block[q]) = cols.col(static_cast<int>(q));
      evals(block[q]) = vals(static_cast<int>(q));
    }
  }
  structure.eigenvalues = std::move(evals);

  ProjectiveMeasurement meas(ProjectiveMeasurement::Unchecked{}, marginal.dims(),
                             std::move(basis));
  return {std::move(meas), std::move(structure)};
}

ProjectiveMeasurement rotate_measurement(const ProjectiveMeasurement& base,
                                         const DegeneracyStructure& structure,
                                         std::span<const double> params) {
  if (static_cast<int>(params.size()) != param_count(structure)) {
    throw DimensionError("rotate_measurement: parameter count does not match the structure");
  }
  ComplexMatrix basis = base.basis();
  std::size_t at = 0;
  for (std::size_t g = 0; g < structure.blocks.size(); ++g) {
    const int bd = structure.block_dims[g];
    if (bd == 1) {
      ++at;  // a 1x1 generator only contributes a phase
      continue;
    }
    const ComplexMatrix h = hermitian_from_params(params.subspan(at, bd * bd), bd);
    at += static_cast<std::size_t>(bd) * bd;
    basis.middleCols(structure.blocks[g].front(), bd) =
        base.basis().middleCols(structure.blocks[g].front(), bd) * exp_i_hermitian(h);
  }
  return ProjectiveMeasurement(ProjectiveMeasurement::Unchecked{}, base.subsystem_dims(),
                               std::move(basis));
}

ProjectiveMeasurement rotate_measurement(const ProjectiveMeasurement& base,
                                         const DegeneracyStructure& structure,
                                         std::span<const ComplexMatrix> block_unitaries) {
  if (block_unitaries.size() != structure.blocks.size()) {
    throw DimensionError("rotate_measurement: one unitary per block required");
  }
  ComplexMatrix basis = base.basis();
  for (std::size_t g = 0; g < structure.blocks.size(); ++g) {
    const int bd = structure.block_dims[g];
    if (bd == 1) continue;
    if (block_unitaries[g].rows() != bd || block_unitaries[g].cols() != bd) {
      throw DimensionError("rotate_measurement: block unitary has the wrong size");
    }
    basis.middleCols(structure.blocks[g].front(), bd) =
        base.basis().middleCols(structure.blocks[g].front(), bd) * block_unitaries[g];
  }
  return ProjectiveMeasurement(ProjectiveMeasurement::Unchecked{}, base.subsystem_dims(),
                               std::move(basis));
}

DensityMatrix apply_measurement(const DensityMatrix& rho, const ProjectiveMeasurement& m,
                                std::span<const int> targets) {
  std::vector<int> tgt_dims;
  for (int t : targets) {
    if (t < 0 || t >= rho.subsystems()) throw IndexError("apply_measurement: target out of range");
    tgt_dims.push_back(rho.dims()[t]);
  }
  if (dims_product(tgt_dims) != m.dim()) {
    throw DimensionError("apply_measurement: measurement does not match the target subsystems");
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (int k = 0; k < m.outcomes(); ++k) {
    const ComplexMatrix e = embed_on_subsystems(m.projector(k), rho.dims(), targets);
    out += e * rho.matrix() * e;
  }
  return DensityMatrix(std::move(out), rho.dims());
}

bool is_locally_invariant(const ProjectiveMeasurement& m, const DensityMatrix& marginal,
                          double tol) {
  if (m.dim() != marginal.dim()) {
    throw DimensionError("is_locally_invariant: dimension mismatch");
  }
  const ComplexMatrix& b = m.basis();
  const ComplexVector diag = (b.adjoint() * marginal.matrix() * b).diagonal();
  const ComplexMatrix post = b * diag.asDiagonal() * b.adjoint();
  return (post - marginal.matrix()).cwiseAbs().maxCoeff() <= tol;
}

MeasurementFamily MeasurementFamily::general(ProjectiveMeasurement base,
                                             DegeneracyStructure structure) {
  std::vector<Factor> f;
  f.push_back({std::move(base), std::move(structure)});
  return MeasurementFamily(std::move(f));
}

MeasurementFamily MeasurementFamily::product(ProjectiveMeasurement base_b,
                                             DegeneracyStructure structure_b,
                                             ProjectiveMeasurement base_c,
                                             DegeneracyStructure structure_c) {
  std::vector<Factor> f;
  f.push_back({std::move(base_b), std::move(structure_b)});
  f.push_back({std::move(base_c), std::move(structure_c)});
  return MeasurementFamily(std::move(f));
}

int MeasurementFamily::param_count() const {
  int n = 0;
  for (const auto& f : factors_) n += qnb::param_count(f.structure);
  return n;
}

bool MeasurementFamily::has_freedom() const {
  for (const auto& f : factors_)
    if (f.structure.degenerate()) return true;
  return false;
}

std::vector<int> MeasurementFamily::block_dims() const {
  std::vector<int> out;
  for (const auto& f : factors_)
    out.insert(out.end(), f.structure.block_dims.begin(), f.structure.block_dims.end());
  return out;
}

std::vector<int> MeasurementFamily::subsystem_dims() const {
  std::vector<int> out;
  for (const auto& f : factors_) {
    const auto& d = f.base.subsystem_dims();
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

namespace {

ProjectiveMeasurement kron_measurement(const ProjectiveMeasurement& a,
                                       const ProjectiveMeasurement& b) {
  const int da = a.dim(), db = b.dim();
  ComplexMatrix basis(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      basis.block(i * db, j * db, db, db) = a.basis()(i, j) * b.basis();
  std::vector<int> dims = a.subsystem_dims();
  dims.insert(dims.end(), b.subsystem_dims().begin(), b.subsystem_dims().end());
  return ProjectiveMeasurement(ProjectiveMeasurement::Unchecked{}, std::move(dims),
                               std::move(basis));
}

}  // namespace

ProjectiveMeasurement MeasurementFamily::build(std::span<const double> params) const {
  if (static_cast<int>(params.size()) != param_count()) {
    throw DimensionError("MeasurementFamily::build: parameter count mismatch");
  }
  std::optional<ProjectiveMeasurement> out;
  std::size_t at = 0;
  for (const auto& f : factors_) {
    const std::size_t n = static_cast<std::size_t>(qnb::param_count(f.structure));
    ProjectiveMeasurement rotated = rotate_measurement(f.base, f.structure, params.subspan(at, n));
    at += n;
    out = out ? kron_measurement(*out, rotated) : std::move(rotated);
  }
  return *out;
}

ProjectiveMeasurement MeasurementFamily::build_from_block_unitaries(
    std::span<const ComplexMatrix> us) const {
  std::optional<ProjectiveMeasurement> out;
  std::size_t at = 0;
  for (const auto& f : factors_) {
    const std::size_t n = f.structure.blocks.size();
    ProjectiveMeasurement rotated = rotate_measurement(f.base, f.structure, us.subspan(at, n));
    at += n;
    out = out ? kron_measurement(*out, rotated) : std::move(rotated);
  }
  return *out;
}

ProjectiveMeasurement MeasurementFamily::base() const {
  std::optional<ProjectiveMeasurement> out;
  for (const auto& f : factors_) out = out ? kron_measurement(*out, f.base) : f.base;
  return *out;
}

}  // namespace qnb
