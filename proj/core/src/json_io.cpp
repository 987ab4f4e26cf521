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

#include "qnb/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace qnb {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open state file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("cannot parse state file " + path + ": " + e.what());
  }
  return j;
}

std::vector<int> read_dims(const json& j, const std::string& path) {
  if (!j.contains("dims") || !j["dims"].is_array()) {
    throw Error("state file " + path + " is missing the \"dims\" array");
  }
  return j["dims"].get<std::vector<int>>();
}

Complex read_complex(const json& entry, const std::string& path) {
  if (!entry.is_array() || entry.size() != 2) {
    throw Error("state file " + path + ": complex entries must be [re, im] pairs");
  }
  return {entry[0].get<double>(), entry[1].get<double>()};
}

json write_complex(const Complex& v) { return json::array({v.real(), v.imag()}); }

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write state file: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace

std::variant<DensityMatrix, PureState> load_state(const std::string& path) {
  const json j = load_json(path);
  try {
    const std::vector<int> dims = read_dims(j, path);

    if (j.contains("matrix")) {
      const auto& rows = j["matrix"];
      const int d = static_cast<int>(rows.size());
      ComplexMatrix m(d, d);
      for (int r = 0; r < d; ++r) {
        if (static_cast<int>(rows[r].size()) != d) {
          throw Error("state file " + path + ": matrix rows must all have the same length");
        }
        for (int c = 0; c < d; ++c) m(r, c) = read_complex(rows[r][c], path);
      }
      return DensityMatrix(std::move(m), dims);
    }
    if (j.contains("amplitudes")) {
      const auto& amps = j["amplitudes"];
      ComplexVector v(static_cast<int>(amps.size()));
      for (int i = 0; i < v.size(); ++i) v(i) = read_complex(amps[i], path);
      return PureState(std::move(v), dims);
    }
  } catch (const json::exception& e) {
    throw Error("state file " + path + " is malformed: " + e.what());
  }
  throw Error("state file " + path + " has neither \"matrix\" nor \"amplitudes\"");
}

DensityMatrix load_state_as_density(const std::string& path) {
  auto state = load_state(path);
  if (auto* rho = std::get_if<DensityMatrix>(&state)) return std::move(*rho);
  return std::get<PureState>(state).to_density();
}

void save_state(const DensityMatrix& rho, const std::string& path) {
  json j;
  j["dims"] = rho.dims();
  json rows = json::array();
  for (int r = 0; r < rho.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < rho.dim(); ++c) row.push_back(write_complex(rho.matrix()(r, c)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  write_json(j, path);
}

void save_state(const PureState& psi, const std::string& path) {
  json j;
  j["dims"] = psi.dims();
  json amps = json::array();
  for (int i = 0; i < psi.dim(); ++i) amps.push_back(write_complex(psi.amplitudes()(i)));
  j["amplitudes"] = std::move(amps);
  write_json(j, path);
}

}  // namespace qnb
