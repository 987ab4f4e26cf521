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

#include <cstdint>
#include <span>

#include "qnb/density_matrix.hpp"

namespace qnb {

/// Maximally entangled state (1/sqrt(m)) sum_i |ii> on m x m.
PureState bell_state(int m);

/// rho = ((1-x)/(m^2-1)) I + ((m^2 x - 1)/(m^2-1)) |Psi><Psi| with |Psi> the
/// maximally entangled state; x in [0, 1].
DensityMatrix isotropic(int m, double x);

/// rho = ((m-x)/(m^3-m)) I + ((m x - 1)/(m^3-m)) S with S the swap operator;
/// x in [-1, 1].
DensityMatrix werner(int m, double x);

/// Haar-random pure state over `dims` (normalized complex Gaussian vector);
/// a fixed seed reproduces identical amplitudes.
PureState random_pure(std::vector<int> dims, std::uint64_t seed);

/// Random mixed state of the induced (partial-trace) measure: the marginal
/// of a Haar pure state on a dim x rank system. rank == 1 gives a pure
/// density matrix; rank == dim is the standard full-rank ensemble.
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);

enum class ClassicalSide { left, right };

/// sum_i p_i rho_i ox |i><i| (side == right) or sum_i p_i |i><i| ox rho_i
/// (side == left). Probabilities must be nonnegative and sum to 1.
DensityMatrix classical_quantum(std::span<const double> probabilities,
                                std::span<const DensityMatrix> states, ClassicalSide side);

}  // namespace qnb
