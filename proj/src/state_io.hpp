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

#pragma once

#include <optional>
#include <string>
#include <variant>

#include "state.hpp"

namespace qconc {

/// A state loaded from disk: pure vector or density matrix.
struct LoadedState {
  std::variant<PureState, DensityMatrix> state;

  bool is_pure() const { return std::holds_alternative<PureState>(state); }
  const SystemShape& shape() const;

  const PureState& pure() const;              // throws if mixed
  DensityMatrix as_density() const;           // pure states become projectors
};

// File format:
//   {"dims": [d1,...,dN],
//    "kind": "pure" | "mixed",
//    "data": [[re,im], ...]                    (length-D vector, pure)
//          | [[[re,im], ...], ...]             (DxD row-major matrix, mixed)}
// Mixed inputs failing Hermiticity/positivity/trace checks are rejected with
// a diagnostic naming the violated invariant and its magnitude.
LoadedState parse_state_json(const std::string& text);
LoadedState load_state_file(const std::string& path);

std::string state_to_json(const PureState& psi);
std::string state_to_json(const DensityMatrix& rho);

}  // namespace qconc
