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

#include "qnb/states.hpp"

#include <cmath>
#include <random>

#include "qnb/indexing.hpp"

namespace qnb {

PureState bell_state(int m) {
  if (m < 2) throw RangeError("bell_state: dimension must be >= 2");
  ComplexVector amp = ComplexVector::Zero(m * m);
  const double a = 1.0 / std::sqrt(static_cast<double>(m));
  for (int i = 0; i < m; ++i) amp(i * m + i) = a;
  return PureState(std::move(amp), {m, m});
}

DensityMatrix isotropic(int m, double x) {
  if (m < 2) throw RangeError("isotropic: dimension must be >= 2");
  if (x < 0.0 || x > 1.0) throw RangeError("isotropic: x must lie in [0, 1]");
  const int d = m * m;
  const ComplexVector psi = bell_state(m).amplitudes();
  ComplexMatrix rho = ((1.0 - x) / (d - 1)) * ComplexMatrix::Identity(d, d) +
                      ((d * x - 1.0) / (d - 1)) * (psi * psi.adjoint());
  return DensityMatrix(std::move(rho), {m, m});
}

DensityMatrix werner(int m, double x) {
  if (m < 2) throw RangeError("werner: dimension must be >= 2");
  if (x < -1.0 || x > 1.0) throw RangeError("werner: x must lie in [-1, 1]");
  const int d = m * m;
  ComplexMatrix swap = ComplexMatrix::Zero(d, d);
  for (int mu = 0; mu < m; ++mu)
    for (int nu = 0; nu < m; ++nu) swap(mu * m + nu, nu * m + mu) = 1.0;
  const double denom = static_cast<double>(m) * m * m - m;
  ComplexMatrix rho = ((m - x) / denom) * ComplexMatrix::Identity(d, d) +
                      ((m * x - 1.0) / denom) * swap;
  return DensityMatrix(std::move(rho), {m, m});
}

PureState random_pure(std::vector<int> dims, std::uint64_t seed) {
  const int d = dims_product(dims);
  auto rng = seeded_rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector amp(d);
  for (int i = 0; i < d; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    amp(i) = Complex(re, im);
  }
  amp /= amp.norm();
  return PureState(std::move(amp), std::move(dims));
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  if (dim < 2) throw RangeError("random_density: dimension must be >= 2");
  if (rank < 1 || rank > dim) throw RangeError("random_density: rank must lie in [1, dim]");
  if (rank == 1) {
    return random_pure({dim}, seed).to_density();
  }
  const PureState purification = random_pure({dim, rank}, seed);
  const int keep[] = {0};
  return partial_trace(purification.to_density(), keep);
}

DensityMatrix classical_quantum(std::span<const double> probabilities,
                                std::span<const DensityMatrix> states, ClassicalSide side) {
  if (probabilities.size() < 2 || probabilities.size() != states.size()) {
    throw RangeError("classical_quantum: need one state per probability (>= 2 of each)");
  }
  double sum = 0.0;
  for (double p : probabilities) {
    if (p < 0.0) throw RangeError("classical_quantum: probabilities must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw RangeError("classical_quantum: probabilities must sum to 1");
  }
  const int ds = states[0].dim();
  for (const auto& s : states) {
    if (s.dim() != ds) throw DimensionError("classical_quantum: states must share a dimension");
  }
  const int n = static_cast<int>(probabilities.size());

  ComplexMatrix out = ComplexMatrix::Zero(ds * n, ds * n);
  std::vector<int> dims;
  if (side == ClassicalSide::right) {
    // sum_i p_i rho_i ox |i><i|
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < ds; ++r)
        for (int c = 0; c < ds; ++c)
          out(r * n + i, c * n + i) = probabilities[i] * states[i].matrix()(r, c);
    dims = states[0].dims();
    dims.push_back(n);
  } else {
    // sum_i p_i |i><i| ox rho_i
    for (int i = 0; i < n; ++i)
      out.block(i * ds, i * ds, ds, ds) = probabilities[i] * states[i].matrix();
    dims.push_back(n);
    for (int d : states[0].dims()) dims.push_back(d);
  }
  return DensityMatrix(std::move(out), std::move(dims));
}

}  // namespace qnb
