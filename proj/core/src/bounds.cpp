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

#include "qnb/bounds.hpp"

#include <algorithm>

#include "qnb/measures.hpp"

namespace qnb {

namespace {

/// Increasing eigenvalues of M M^t padded with the zeros implied by the
/// rectangular shape, computed on the smaller Gram side.
std::vector<double> gram_eigenvalues(const RealMatrix& m) {
  const long rows = m.rows(), cols = m.cols();
  RealMatrix gram = cols <= rows ? RealMatrix(m.transpose() * m) : RealMatrix(m * m.transpose());
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram, Eigen::EigenvaluesOnly);
  std::vector<double> eig(es.eigenvalues().data(), es.eigenvalues().data() + gram.rows());
  for (double& v : eig) v = std::max(v, 0.0);
  if (cols < rows) eig.insert(eig.begin(), static_cast<std::size_t>(rows - cols), 0.0);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace

CorrelationMatrix lambda_joint(const CorrelationMatrix& lambda_ab,
                               const CorrelationMatrix& lambda_cd) {
  const int m2 = lambda_ab.rows(), n2 = lambda_ab.cols();
  const int u2 = lambda_cd.rows(), v2 = lambda_cd.cols();
  CorrelationMatrix out;
  out.entries.resize(static_cast<long>(n2) * u2, static_cast<long>(m2) * v2);
  out.row_label = "b,c";
  out.col_label = "a,d";
  for (int j = 0; j < n2; ++j)
    for (int k = 0; k < u2; ++k)
      for (int i = 0; i < m2; ++i)
        for (int l = 0; l < v2; ++l)
          out.entries(static_cast<long>(j) * u2 + k, static_cast<long>(i) * v2 + l) =
              lambda_ab.entries(i, j) * lambda_cd.entries(k, l);
  return out;
}

BoundResult bound_thm1(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd) {
  if (rho_ab.subsystems() != 2 || rho_cd.subsystems() != 2) {
    throw DimensionError("bound_thm1: inputs must be bipartite");
  }
  const CorrelationMatrix joint = lambda_joint(bloch_matrix(rho_ab), bloch_matrix(rho_cd));
  const int outcomes = rho_ab.dims()[1] * rho_cd.dims()[0];  // n * u

  const std::vector<double> eig = gram_eigenvalues(joint.entries);
  BoundResult res;
  res.normalization = joint.squared_norm();
  res.eigenvalues_used.assign(eig.begin(), eig.begin() + outcomes);
  double sum = 0.0;
  for (double v : res.eigenvalues_used) sum += v;
  res.bound = 1.0 - sum / res.normalization;
  return res;
}

BoundResult bound_thm2(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd,
                       double degeneracy_tol) {
  if (rho_ab.subsystems() != 2 || rho_cd.subsystems() != 2) {
    throw DimensionError("bound_thm2: inputs must be bipartite");
  }
  const int keep_b[] = {1};
  auto [meas_b, structure_b] =
      eigenmeasurement(partial_trace(rho_ab, keep_b), degeneracy_tol);
  if (structure_b.degenerate()) {
    throw DegeneracyError("bound_thm2: marginal rho^b is degenerate");
  }

  const int targets[] = {1};
  const double fid = fidelity_alt(rho_ab, apply_measurement(rho_ab, meas_b, targets));

  const CorrelationMatrix lambda_cd = bloch_matrix(rho_cd);
  const int u = rho_cd.dims()[0];
  const std::vector<double> eig = gram_eigenvalues(lambda_cd.entries);

  BoundResult res;
  res.normalization = lambda_cd.squared_norm();
  res.eigenvalues_used.assign(eig.begin(), eig.begin() + u);
  double sum = 0.0;
  for (double v : res.eigenvalues_used) sum += v;
  res.bound = 1.0 - fid * sum / res.normalization;
  return res;
}

}  // namespace qnb
