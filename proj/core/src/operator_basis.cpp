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

#include "qnb/operator_basis.hpp"

#include <cmath>

namespace qnb {

OperatorBasis operator_basis(int d) {
  if (d < 2) throw RangeError("operator_basis: dimension must be >= 2");

  OperatorBasis basis;
  basis.dim = d;
  basis.elements.reserve(static_cast<std::size_t>(d) * d);

  basis.elements.push_back(ComplexMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 1; k < d; ++k) {
    for (int j = 0; j < k; ++j) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(j, k) = inv_sqrt2;
      sym(k, j) = inv_sqrt2;
      basis.elements.push_back(sym);

      ComplexMatrix asym = ComplexMatrix::Zero(d, d);
      asym(j, k) = Complex(0.0, -inv_sqrt2);
      asym(k, j) = Complex(0.0, inv_sqrt2);
      basis.elements.push_back(asym);
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) diag(j, j) = scale;
    diag(l, l) = -static_cast<double>(l) * scale;
    basis.elements.push_back(diag);
  }
  return basis;
}

CorrelationMatrix bloch_matrix(const DensityMatrix& rho, const OperatorBasis& basis_a,
                               const OperatorBasis& basis_b) {
  if (rho.subsystems() != 2) throw DimensionError("bloch_matrix: state must be bipartite");
  const int da = rho.dims()[0], db = rho.dims()[1];
  if (basis_a.dim != da || basis_b.dim != db) {
    throw DimensionError("bloch_matrix: basis dimensions do not match the state");
  }

  const int na = static_cast<int>(basis_a.size());
  const int nb = static_cast<int>(basis_b.size());
  CorrelationMatrix out;
  out.entries.resize(na, nb);
  out.row_label = "a";
  out.col_label = "b";

  // Tr(rho (X ox Y)) contracted blockwise: rho's (i,i') block against X(i',i) Y
  for (int p = 0; p < na; ++p) {
    const ComplexMatrix& x = basis_a.elements[p];
    for (int q = 0; q < nb; ++q) {
      const ComplexMatrix& y = basis_b.elements[q];
      Complex acc(0.0, 0.0);
      for (int i = 0; i < da; ++i)
        for (int ip = 0; ip < da; ++ip) {
          if (x(ip, i) == Complex(0.0, 0.0)) continue;
          acc += x(ip, i) * (rho.matrix().block(i * db, ip * db, db, db).transpose().cwiseProduct(y)).sum();
        }
      out.entries(p, q) = acc.real();
    }
  }
  return out;
}

CorrelationMatrix bloch_matrix(const DensityMatrix& rho) {
  if (rho.subsystems() != 2) throw DimensionError("bloch_matrix: state must be bipartite");
  return bloch_matrix(rho, operator_basis(rho.dims()[0]), operator_basis(rho.dims()[1]));
}

}  // namespace qnb
