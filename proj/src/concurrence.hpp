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

#include "partitions.hpp"
#include "state.hpp"

namespace qconc {

struct ConcurrenceValue {
  double value = 0.0;
  double squared = 0.0;
};

/// N-partite concurrence of a normalized pure state:
///   C_N = 2^(1-N/2) sqrt((2^N - 2) - sum over nonempty proper subsets a of
///   Tr(rho_a^2)).
/// Purities come in complement pairs for pure states, so only half the
/// subsets are contracted.
ConcurrenceValue concurrence_full(const PureState& psi);

/// Concurrence treating each block of P as one coarse subsystem: the same
/// formula with M = |P| and the sum over the 2^M - 2 block unions.
ConcurrenceValue concurrence_partition(const PureState& psi, const Partition& p);

/// Amplitude quadratic form for 2x2x4 states:
///   C^2 = 1/2 sum_{ijk,pqm} ( |a_ijk a_pqm - a_ijm a_pqk|^2
///                           + |a_ijk a_pqm - a_iqk a_pjm|^2
///                           + |a_ijk a_pqm - a_pjk a_iqm|^2 ),
/// summed over ALL index tuples (each unordered pair counted twice, absorbed
/// by the 1/2). With that convention the value coincides with the partition
/// formula on 1|2|3, which fixes the normalization. Subnormalized inputs are
/// evaluated as-is; the form is homogeneous of degree 2 in |a|^2.
ConcurrenceValue concurrence_224_coefficient(const PureState& psi);

/// The same quadratic form for any 2x2xd shape (d >= 2); this is what the
/// level-pair substates evaluate on their restricted index range.
double amplitude_form_squared(const PureState& psi);

/// Restriction of a 2x2x4 pure state to third-index levels {k1,k2}, not
/// renormalized; the result is a (generally subnormalized) 2x2x2 state.
PureState substate_pure(const PureState& psi, int k1, int k2);

/// All six level pairs {k1,k2} of the 4-dimensional factor, ascending.
std::vector<std::pair<int, int>> substate_selectors();

}  // namespace qconc
