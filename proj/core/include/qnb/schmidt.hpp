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

#include <vector>

#include "qnb/density_matrix.hpp"

namespace qnb {

/// Bi-orthogonal expansion |psi> = sum_i s_i |i_L> ox |i_R> with amplitudes
/// s_i >= 0 sorted descending and sum_i s_i^2 = 1.
struct SchmidtDecomposition {
  RealVector coefficients;                 // min(dL, dR) entries, descending
  std::vector<ComplexVector> left_basis;   // orthonormal, one per coefficient
  std::vector<ComplexVector> right_basis;

  /// sum_i s_i |i_L> ox |i_R>, for round-trip checks.
  ComplexVector reconstruct() const;
};

/// Schmidt decomposition across the cut that puts the first `cut` subsystems
/// on the left.
SchmidtDecomposition schmidt(const PureState& psi, int cut = 1);

}  // namespace qnb
