// Copyright 2026 The qconc Authors
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

#include "state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qconc {

const SystemShape& LoadedState::shape() const {
  return is_pure() ? std::get<PureState>(state).shape : std::get<DensityMatrix>(state).shape;
}

const PureState& LoadedState::pure() const {
  if (!is_pure()) throw_domain("operation requires a pure state, got a mixed one");
  return std::get<PureState>(state);
}

DensityMatrix LoadedState::as_density() const {
  if (is_pure()) return density_from_pure(std::get<PureState>(state));
  return std::get<DensityMatrix>(state);
}

namespace {

cxd parse_complex(const nlohmann::json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw_io(std::string("state JSON: ") + where + " entries must be [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

LoadedState parse_state_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw_io(std::string("state JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw_io("state JSON must be an object");
  if (!j.contains("dims") || !j["dims"].is_array())
    throw_io("state JSON: missing \"dims\" array");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw_io("state JSON: missing \"kind\" (\"pure\" or \"mixed\")");
  if (!j.contains("data")) throw_io("state JSON: missing \"data\"");

  std::vector<int> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<int>() < 1)
      throw_io("state JSON: dims must be positive integers");
    dims.push_back(d.get<int>());
  }
  SystemShape shape(dims);
  const long total = shape.total_dim();
  const std::string kind = j["kind"].get<std::string>();
  const auto& data = j["data"];

  if (kind == "pure") {
    if (!data.is_array() || static_cast<long>(data.size()) != total)
      throw_io("state JSON: pure data must be a length-" + std::to_string(total) + " vector");
    Vector amps(total);
    for (long i = 0; i < total; ++i) amps(i) = parse_complex(data[static_cast<size_t>(i)], "vector");
    try {
      return LoadedState{make_pure(std::move(shape), std::move(amps))};
    } catch (const Error& e) {
      throw_io(std::string("state file invalid: ") + e.what());
    }
  }
  if (kind == "mixed") {
    if (!data.is_array() || static_cast<long>(data.size()) != total)
      throw_io("state JSON: mixed data must be a " + std::to_string(total) + "x" +
               std::to_string(total) + " matrix");
    Matrix m(total, total);
    for (long r = 0; r < total; ++r) {
      const auto& row = data[static_cast<size_t>(r)];
      if (!row.is_array() || static_cast<long>(row.size()) != total)
        throw_io("state JSON: mixed data row " + std::to_string(r) + " has wrong length");
      for (long c = 0; c < total; ++c) m(r, c) = parse_complex(row[static_cast<size_t>(c)], "matrix");
    }
    try {
      return LoadedState{make_density(std::move(shape), std::move(m))};
    } catch (const Error& e) {
      throw_io(std::string("state file invalid: ") + e.what());
    }
  }
  throw_io("state JSON: kind must be \"pure\" or \"mixed\", got \"" + kind + "\"");
}

LoadedState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_io("cannot open state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

namespace {

nlohmann::json dims_json(const SystemShape& shape) {
  nlohmann::json out = nlohmann::json::array();
  for (int d : shape.dims) out.push_back(d);
  return out;
}

}  // namespace

std::string state_to_json(const PureState& psi) {
  nlohmann::ordered_json j;
  j["dims"] = dims_json(psi.shape);
  j["kind"] = "pure";
  nlohmann::json data = nlohmann::json::array();
  for (long i = 0; i < psi.amps.size(); ++i)
    data.push_back({psi.amps(i).real(), psi.amps(i).imag()});
  j["data"] = data;
  return j.dump();
}

std::string state_to_json(const DensityMatrix& rho) {
  nlohmann::ordered_json j;
  j["dims"] = dims_json(rho.shape);
  j["kind"] = "mixed";
  nlohmann::json data = nlohmann::json::array();
  for (long r = 0; r < rho.mat.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (long c = 0; c < rho.mat.cols(); ++c)
      row.push_back({rho.mat(r, c).real(), rho.mat(r, c).imag()});
    data.push_back(row);
  }
  j["data"] = data;
  return j.dump();
}

}  // namespace qconc
