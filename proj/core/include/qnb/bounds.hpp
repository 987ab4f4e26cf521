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

#include "qnb/measurement.hpp"
#include "qnb/operator_basis.hpp"

namespace qnb {

/// Eigenvalue upper bound on the nonbilocal measure.
struct BoundResult {
  double bound = 0.0;
  std::vector<double> eigenvalues_used;  // increasing
  double normalization = 0.0;            // ||Lambda||^2 in the denominator
};

/// Coefficient array of rho_ab ox rho_cd regrouped so rows carry the
/// measured indices (j, k) and columns carry (i, l): the entry at
/// (j*u^2 + k, i*v^2 + l) is lambda_ab(i, j) * lambda_cd(k, l). Its squared
/// norm is the product of the factors' squared norms (the joint purity).
CorrelationMatrix lambda_joint(const CorrelationMatrix& lambda_ab,
                               const CorrelationMatrix& lambda_cd);

/// Joint correlation-matrix bound: 1 - (1/||Lambda||^2) sum of the n*u
/// smallest eigenvalues of Lambda_joint Lambda_joint^t, with n = dim(b),
/// u = dim(c). Dominates the nonbilocal measure for any feasible set.
BoundResult bound_thm1(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd);

/// Bound for nondegenerate rho^b: 1 - F(rho_ab, Pi^b(rho_ab)) *
/// (sum of the u smallest eigenvalues of Lambda_cd Lambda_cd^t) /
/// ||Lambda_cd||^2, with Pi^b the eigenmeasurement of rho^b. Dominates the
/// nonbilocal measure over the product feasible set. Throws DegeneracyError
/// when rho^b is degenerate at the given tolerance.
BoundResult bound_thm2(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd,
                       double degeneracy_tol = kDegeneracyTol);

}  // namespace qnb
