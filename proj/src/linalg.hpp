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

#include "state.hpp"

namespace qconc {

/// Reduced density matrix on the subsystems in `keep` (ascending subsystem
/// order), tracing out the complement. Trace and Hermiticity are preserved.
DensityMatrix partial_trace(const DensityMatrix& rho, SubsetMask keep);

/// Tr(rho^2). Requires a Hermitian matrix; equals the squared Frobenius norm.
double purity(const DensityMatrix& rho);

/// Sum of singular values.
double trace_norm(const Matrix& m);

/// Transpose the indices of the subsystems in `parts`. Preserves Hermiticity
/// and trace; the result need not be positive.
Matrix partial_transpose(const DensityMatrix& rho, SubsetMask parts);

/// Realignment across the bipartition (block_a | block_b): the m^2 x n^2
/// matrix R with R[(i,k),(j,l)] = rho[(i,j),(k,l)], i,k indexing block_a and
/// j,l indexing block_b. Blocks must partition all subsystems.
Matrix realign(const DensityMatrix& rho, SubsetMask block_a, SubsetMask block_b);

/// Reorder subsystems so that new subsystem t is old subsystem order[t]
/// (1-based, a permutation of 1..N).
PureState permute_systems(const PureState& psi, const std::vector<int>& order);
DensityMatrix permute_systems(const DensityMatrix& rho, const std::vector<int>& order);

/// Reinterpret consecutive subsystems as fewer coarse subsystems with the
/// given dimensions (products must match; flat layout is unchanged).
PureState reshape(const PureState& psi, std::vector<int> dims);
DensityMatrix reshape(const DensityMatrix& rho, std::vector<int> dims);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

}  // namespace qconc
