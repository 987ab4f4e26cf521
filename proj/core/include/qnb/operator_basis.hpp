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

#include <string>
#include <vector>

#include "qnb/density_matrix.hpp"

namespace qnb {

/// d^2 Hermitian matrices, orthonormal under the trace inner product
/// Tr(X_k X_l) = delta_kl, spanning the Hermitian matrices on C^d.
/// Element 0 is always 1/sqrt(d).
struct OperatorBasis {
  int dim = 0;
  std::vector<ComplexMatrix> elements;

  std::size_t size() const noexcept { return elements.size(); }
};

/// Canonical basis: normalized identity followed by the generalized
/// Gell-Mann matrices (symmetric and antisymmetric pairs for j < k, then
/// the diagonal ladder), all scaled to unit trace norm.
OperatorBasis operator_basis(int d);

/// Real coefficient matrix of a state in a pair of orthonormal Hermitian
/// operator bases; entry (i, j) = Tr(rho X_i ox Y_j). The squared Frobenius
/// norm equals the state's purity.
struct CorrelationMatrix {
  RealMatrix entries;
  std::string row_label;  // which subsystem the row basis index runs over
  std::string col_label;

  double squared_norm() const { return entries.squaredNorm(); }
  int rows() const { return static_cast<int>(entries.rows()); }
  int cols() const { return static_cast<int>(entries.cols()); }
};

CorrelationMatrix bloch_matrix(const DensityMatrix& rho, const OperatorBasis& basis_a,
                               const OperatorBasis& basis_b);

/// Same, in the canonical bases of the two subsystem dimensions.
CorrelationMatrix bloch_matrix(const DensityMatrix& rho);

}  // namespace qnb
