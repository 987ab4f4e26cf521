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

#include <string>
#include <variant>

#include "qnb/density_matrix.hpp"

// JSON state files, row-major, complex entries as [re, im] pairs:
//   density: {"dims": [2, 2], "matrix": [[[re, im], ...], ...]}
//   pure:    {"dims": [2, 2], "amplitudes": [[re, im], ...]}

namespace qnb {

std::variant<DensityMatrix, PureState> load_state(const std::string& path);

/// Loads either representation; pure states are converted to projectors.
DensityMatrix load_state_as_density(const std::string& path);

void save_state(const DensityMatrix& rho, const std::string& path);
void save_state(const PureState& psi, const std::string& path);

}  // namespace qnb
