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

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "qnb/errors.hpp"

namespace qnb {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Construction tolerances shared by every validated state type.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kNormTol = 1e-12;

/// Hermitian, unit-trace, positive-semidefinite matrix together with the
/// declared tensor factorization of the space it lives on. Immutable after
/// construction; the constructor enforces all three invariants and throws
/// ValidationError naming the violated one.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::vector<int> dims);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  int subsystems() const noexcept { return static_cast<int>(dims_.size()); }

  /// Same matrix, re-declared over a coarser/finer factorization with the
  /// same total dimension (e.g. [2,2,2] viewed as the bipartition [2,4]).
  DensityMatrix regrouped(std::vector<int> new_dims) const;

 private:
  ComplexMatrix matrix_;
  std::vector<int> dims_;
};

/// Normalized state vector over a declared factorization.
class PureState {
 public:
  PureState(ComplexVector amplitudes, std::vector<int> dims);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  int dim() const noexcept { return static_cast<int>(amplitudes_.size()); }

  DensityMatrix to_density() const;

 private:
  ComplexVector amplitudes_;
  std::vector<int> dims_;
};

/// Validates and wraps `matrix` as a density matrix over `dims`.
DensityMatrix make_density(const ComplexMatrix& matrix, std::vector<int> dims);

/// Tensor product; subsystem lists concatenate.
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);
PureState kron(const PureState& a, const PureState& b);

/// Marginal over the kept subsystems (ascending order preserved).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Reorders subsystems: subsystem `perm[k]` of the input becomes subsystem
/// `k` of the output.
DensityMatrix permute_subsystems(const DensityMatrix& rho, std::span<const int> perm);

/// Exchanges the two factors of a bipartite state.
DensityMatrix swap_bipartite(const DensityMatrix& rho);

/// Lifts an operator acting on the (sorted) target subsystems to the full
/// space, identity elsewhere. Targets need not be contiguous.
ComplexMatrix embed_on_subsystems(const ComplexMatrix& op, std::span<const int> dims,
                                  std::span<const int> targets);

}  // namespace qnb
