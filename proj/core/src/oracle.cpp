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

#include "qnb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qnb/indexing.hpp"

namespace qnb {

namespace {

constexpr std::size_t kChunk = 1024;
constexpr int kHistogramBins = 12;

Histogram make_histogram(const std::vector<double>& values) {
  Histogram h;
  if (values.empty()) return h;
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  h.lo = *lo_it;
  h.hi = *hi_it;
  h.counts.assign(kHistogramBins, 0);
  if (h.hi == h.lo) {
    h.counts[0] = values.size();
    return h;
  }
  const double scale = kHistogramBins / (h.hi - h.lo);
  for (double v : values) {
    int bin = static_cast<int>((v - h.lo) * scale);
    if (bin >= kHistogramBins) bin = kHistogramBins - 1;
    ++h.counts[static_cast<std::size_t>(bin)];
  }
  return h;
}

bool better(double candidate, double incumbent, Direction dir) {
  return dir == Direction::minimize ? candidate < incumbent : candidate > incumbent;
}

}  // namespace

ComplexMatrix haar_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      a(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

OracleReport sampled_extremum(const MeasurementObjective& objective,
                              const MeasurementFamily& family, std::size_t n_samples,
                              std::uint64_t seed, Direction direction) {
  if (n_samples < 1) throw RangeError("sampled_extremum: need at least one sample");

  const std::vector<int> blocks = family.block_dims();
  std::vector<double> values;
  values.reserve(n_samples);
  std::vector<ComplexMatrix> us(blocks.size());

  double best = 0.0;
  bool first = true;
  for (std::size_t chunk = 0; chunk * kChunk < n_samples; ++chunk) {
    auto rng = seeded_rng(mix_seed(seed, chunk));
    const std::size_t end = std::min(n_samples, (chunk + 1) * kChunk);
    for (std::size_t s = chunk * kChunk; s < end; ++s) {
      for (std::size_t g = 0; g < blocks.size(); ++g) {
        us[g] = blocks[g] == 1 ? ComplexMatrix::Identity(1, 1) : haar_unitary(blocks[g], rng);
      }
      const double v = objective(family.build_from_block_unitaries(us));
      values.push_back(v);
      if (first || better(v, best, direction)) {
        best = v;
        first = false;
      }
    }
  }

  OracleReport report;
  report.best_value = best;
  report.samples = n_samples;
  report.seed = seed;
  report.method = "sampled";
  report.histogram = make_histogram(values);
  return report;
}

OracleReport grid_extremum(const MeasurementObjective& objective, const MeasurementFamily& family,
                           int resolution, Direction direction) {
  if (resolution < 1) throw RangeError("grid_extremum: resolution must be >= 1");
  const std::vector<int> blocks = family.block_dims();
  std::vector<std::size_t> free_blocks;
  for (std::size_t g = 0; g < blocks.size(); ++g) {
    if (blocks[g] > 2) {
      throw StructureError("grid_extremum: only blocks of size <= 2 are grid-parameterizable");
    }
    if (blocks[g] == 2) free_blocks.push_back(g);
  }

  const int n_theta = resolution;
  const int n_phi = resolution == 1 ? 1 : 2 * resolution;
  const std::size_t per_block = static_cast<std::size_t>(n_theta) * n_phi;
  std::size_t total = 1;
  for (std::size_t g = 0; g < free_blocks.size(); ++g) total *= per_block;

  std::vector<ComplexMatrix> us(blocks.size(), ComplexMatrix::Identity(1, 1));
  for (std::size_t g : free_blocks) us[g] = ComplexMatrix::Identity(2, 2);

  auto bloch_unitary = [&](int ti, int pi) {
    const double theta = n_theta == 1 ? 0.0 : (std::numbers::pi / 2.0) * ti / (n_theta - 1);
    const double phi = 2.0 * std::numbers::pi * pi / n_phi;
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    const Complex e = std::exp(Complex(0.0, phi));
    ComplexMatrix u(2, 2);
    u(0, 0) = c;
    u(1, 0) = e * s;
    u(0, 1) = -std::conj(e) * s;
    u(1, 1) = c;
    return u;
  };

  std::vector<double> values;
  values.reserve(total);
  double best = 0.0;
  bool first = true;
  for (std::size_t point = 0; point < total; ++point) {
    std::size_t rem = point;
    for (std::size_t g : free_blocks) {
      const std::size_t local = rem % per_block;
      rem /= per_block;
      us[g] = bloch_unitary(static_cast<int>(local / n_phi), static_cast<int>(local % n_phi));
    }
    const double v = objective(family.build_from_block_unitaries(us));
    values.push_back(v);
    if (first || better(v, best, direction)) {
      best = v;
      first = false;
    }
  }

  OracleReport report;
  report.best_value = best;
  report.samples = total;
  report.seed = 0;
  report.method = "grid";
  report.histogram = make_histogram(values);
  return report;
}

}  // namespace qnb
