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
#include <random>
#include <span>
#include <vector>

namespace qnb {

/// Product of subsystem dimensions, i.e. the total Hilbert-space dimension.
int dims_product(std::span<const int> dims);

/// Row-major decomposition of a flat index into per-subsystem digits.
std::vector<int> unravel_index(int flat, std::span<const int> dims);

/// Inverse of unravel_index.
int ravel_index(std::span<const int> digits, std::span<const int> dims);

/// Deterministic substream seed derived from a master seed and an index
/// (splitmix64 over the combined words). Disjoint indices give independent
/// streams, so work can be partitioned without changing results.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

inline std::mt19937_64 seeded_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

}  // namespace qnb
