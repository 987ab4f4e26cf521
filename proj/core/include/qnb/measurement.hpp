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
#include <span>
#include <utility>
#include <vector>

#include "qnb/density_matrix.hpp"

namespace qnb {

/// Default grouping tolerance for degenerate eigenvalues, relative to the
/// spectral range of the marginal.
inline constexpr double kDegeneracyTol = 1e-8;

/// Complete set of mutually orthogonal rank-one projectors on a (possibly
/// composite) subsystem, stored as the orthonormal basis of measurement
/// directions: column k of basis() spans projector k.
class ProjectiveMeasurement {
 public:
  ProjectiveMeasurement(std::vector<int> subsystem_dims, ComplexMatrix basis);

  const std::vector<int>& subsystem_dims() const noexcept { return subsystem_dims_; }
  int dim() const noexcept { return static_cast<int>(basis_.rows()); }
  int outcomes() const noexcept { return static_cast<int>(basis_.cols()); }
  const ComplexMatrix& basis() const noexcept { return basis_; }

  ComplexVector direction(int k) const { return basis_.col(k); }
  ComplexMatrix projector(int k) const { return basis_.col(k) * basis_.col(k).adjoint(); }
  std::vector<ComplexMatrix> projectors() const;

  /// Completeness, orthogonality and unit-rank of the projector set, i.e.
  /// how far basis^dag basis is from the identity.
  double orthonormality_defect() const;

  struct Unchecked {};
  ProjectiveMeasurement(Unchecked, std::vector<int> subsystem_dims, ComplexMatrix basis)
      : subsystem_dims_(std::move(subsystem_dims)), basis_(std::move(basis)) {}

 private:
  std::vector<int> subsystem_dims_;
  ComplexMatrix basis_;
};

/// Partition of a marginal spectrum into (numerically) degenerate groups.
/// Eigenvalues are sorted descending and aligned with the projector order of
/// the measurement they came from; each block is a contiguous index range.
/// The unitary freedom inside the blocks is the optimization manifold.
struct DegeneracyStructure {
  RealVector eigenvalues;
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_dims;
  double tolerance = 0.0;  // absolute gap threshold used for the grouping

  bool degenerate() const {
    for (int d : block_dims)
      if (d > 1) return true;
    return false;
  }
};

/// Real coordinates for the block-unitary freedom: a block of size d
/// contributes d^2 Hermitian-generator coordinates.
using BlockUnitaryParams = std::vector<double>;

int param_count(const DegeneracyStructure& structure);

/// Projectors onto an eigenbasis of the marginal, canonically ordered by
/// descending eigenvalue (ties by lexicographic projector entries), plus the
/// degeneracy grouping at the given relative tolerance.
std::pair<ProjectiveMeasurement, DegeneracyStructure> eigenmeasurement(
    const DensityMatrix& marginal, double tolerance = kDegeneracyTol);

/// Rotates `base` by U = direct sum over blocks of exp(i H_g), with H_g the
/// Hermitian generator built from block g's parameters in the marginal
/// eigenbasis. The result is locally invariant for the marginal that
/// produced `structure`.
ProjectiveMeasurement rotate_measurement(const ProjectiveMeasurement& base,
                                         const DegeneracyStructure& structure,
                                         std::span<const double> params);

/// Same, with explicit per-block unitaries (one entry per block, including
/// size-1 blocks, where the entry is ignored up to phase).
ProjectiveMeasurement rotate_measurement(const ProjectiveMeasurement& base,
                                         const DegeneracyStructure& structure,
                                         std::span<const ComplexMatrix> block_unitaries);

/// Post-measurement state sum_k (1 ox Pi_k ox 1) rho (1 ox Pi_k ox 1) with
/// the measurement acting on the given subsystems of rho.
DensityMatrix apply_measurement(const DensityMatrix& rho, const ProjectiveMeasurement& m,
                                std::span<const int> targets);

/// True iff sum_k Pi_k marginal Pi_k = marginal entrywise within tol.
bool is_locally_invariant(const ProjectiveMeasurement& m, const DensityMatrix& marginal,
                          double tol);

/// A feasible set of locally invariant measurements, parameterized by block
/// unitaries. `general` is the full set for one marginal; `product` models
/// Pi^b ox Pi^c, each factor invariant for its own marginal.
class MeasurementFamily {
 public:
  static MeasurementFamily general(ProjectiveMeasurement base, DegeneracyStructure structure);
  static MeasurementFamily product(ProjectiveMeasurement base_b, DegeneracyStructure structure_b,
                                   ProjectiveMeasurement base_c, DegeneracyStructure structure_c);

  int param_count() const;
  bool has_freedom() const;

  /// Block dimensions across all factors, in parameter order.
  std::vector<int> block_dims() const;

  /// Dimensions of the subsystems the built measurement acts on.
  std::vector<int> subsystem_dims() const;

  ProjectiveMeasurement build(std::span<const double> params) const;
  ProjectiveMeasurement build_from_block_unitaries(std::span<const ComplexMatrix> us) const;

  /// The zero-parameter point (the base eigenmeasurement).
  ProjectiveMeasurement base() const;

 private:
  struct Factor {
    ProjectiveMeasurement base;
    DegeneracyStructure structure;
  };
  explicit MeasurementFamily(std::vector<Factor> factors) : factors_(std::move(factors)) {}
  std::vector<Factor> factors_;
};

}  // namespace qnb
