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

#include "qnb/schmidt.hpp"

#include <Eigen/SVD>

#include "qnb/indexing.hpp"

namespace qnb {

ComplexVector SchmidtDecomposition::reconstruct() const {
  const int dl = static_cast<int>(left_basis.front().size());
  const int dr = static_cast<int>(right_basis.front().size());
  ComplexVector out = ComplexVector::Zero(dl * dr);
  for (int k = 0; k < coefficients.size(); ++k) {
    for (int i = 0; i < dl; ++i)
      out.segment(i * dr, dr) += coefficients(k) * left_basis[k](i) * right_basis[k];
  }
  return out;
}

SchmidtDecomposition schmidt(const PureState& psi, int cut) {
  const auto& dims = psi.dims();
  if (cut < 1 || cut >= static_cast<int>(dims.size())) {
    throw DimensionError("schmidt: cut must split the subsystems into two nonempty groups");
  }
  const int dl = dims_product(std::span(dims).first(cut));
  const int dr = psi.dim() / dl;

  // psi reshaped so that M(i,j) = amplitude of |i_L>|j_R|
  ComplexMatrix m(dl, dr);
  for (int i = 0; i < dl; ++i) m.row(i) = psi.amplitudes().segment(i * dr, dr).transpose();

  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const int r = static_cast<int>(svd.singularValues().size());

  SchmidtDecomposition out;
  out.coefficients = svd.singularValues();
  out.left_basis.reserve(r);
  out.right_basis.reserve(r);
  for (int k = 0; k < r; ++k) {
    out.left_basis.push_back(svd.matrixU().col(k));
    // M = U S V^dag, so the right vectors enter conjugated
    out.right_basis.push_back(svd.matrixV().col(k).conjugate());
  }
  return out;
}

}  // namespace qnb
