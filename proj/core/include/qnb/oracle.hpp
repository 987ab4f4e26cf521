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
#include <functional>
#include <random>
#include <string>

#include "qnb/measurement.hpp"

namespace qnb {

enum class Direction { minimize, maximize };

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases folded into Q.
ComplexMatrix haar_unitary(int d, std::mt19937_64& rng);

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::size_t> counts;
};

/// Brute-force baseline result. Reproducible bit-for-bit given (seed,
/// samples); used to certify optimizer outputs.
struct OracleReport {
  double best_value = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string method;  // "sampled" or "grid"
  Histogram histogram;
};

using MeasurementObjective = std::function<double(const ProjectiveMeasurement&)>;

/// Extremum of the objective over `n_samples` measurements built from
/// Haar-random block unitaries of the family. Samples are drawn from
/// fixed-size chunks with substream seeds derived from `seed`, so the result
/// does not depend on how the chunks are scheduled and prefixes are nested:
/// growing n_samples only extends the sample sequence.
OracleReport sampled_extremum(const MeasurementObjective& objective,
                              const MeasurementFamily& family, std::size_t n_samples,
                              std::uint64_t seed, Direction direction);

/// Extremum over a dense angle grid. Every block must have size <= 2; a
/// size-2 block's projector pair is a Bloch direction, parameterized by
/// theta in [0, pi/2] (`resolution` points) and phi in [0, 2pi)
/// (2*resolution points). resolution == 1 collapses to the base point.
OracleReport grid_extremum(const MeasurementObjective& objective, const MeasurementFamily& family,
                           int resolution, Direction direction);

}  // namespace qnb
