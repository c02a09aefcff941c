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

#include <cstdint>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "concurrence.hpp"
#include "weights.hpp"

namespace qconc {

// Quantities the property suites are built from. Each is deterministic for a
// fixed seed; suites assert tolerances on top.

/// sum_P w_P C_P^2(psi) for a pure state.
double scheme_pure_squared(const PureState& psi, const WeightScheme& scheme);

/// max over Haar 4-qubit states of |C_4^2 - (1/12)(2 sum tri + sum 2|2 bi)|.
double four_party_pure_identity_dev(int n_states, std::uint64_t seed);

/// min over Haar 2x2x4 states of C_3^2 - (1/3) sum of substate C_3^2.
double level_pair_pure_slack(int n_states, std::uint64_t seed);

/// max over Haar 2x2x4 states of |amplitude form - partition form on 1|2|3|.
double amplitude_form_dev(int n_states, std::uint64_t seed);

/// max over Haar states of |C_N (full) - C_M (all-singletons partition)|.
double singleton_partition_dev(const SystemShape& shape, int n_states, std::uint64_t seed);

/// min over random rank<=4 4-qubit mixed states of
/// four_party_bound(relation) - bipartition_sum_bound, same providers.
double hierarchy_slack(int n_states, std::uint64_t seed, const ProviderSet& providers);

/// max over random two-qubit mixed states of (bipartite bound - wootters),
/// over ppt, ccnr and best providers.
double two_qubit_soundness_gap(int n_states, std::uint64_t seed);

/// max over random product mixtures of any multipartite bound value.
double separable_bound_ceiling(int n_mixtures, std::uint64_t seed);

/// max over random pure 4-qubit states of (bound - C_4^2) for the four-party,
/// substate and bipartition-sum bounds (rank-1 inputs, exact value known).
double pure_soundness_gap(int n_states, std::uint64_t seed);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Every invariant suite, deterministic per seed. Runs in a few seconds.
std::vector<CheckResult> run_selftest(std::uint64_t seed);

std::string format_selftest_report(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qconc
