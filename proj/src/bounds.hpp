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

#include <string>
#include <vector>

#include "partitions.hpp"
#include "state.hpp"
#include "weights.hpp"

namespace qconc {

/// Certified lower bound on a (squared) concurrence, with the per-partition
/// or per-selector squared terms that built it.
struct BoundReport {
  std::string method;
  double value = 0.0;
  double squared = 0.0;
  std::vector<std::pair<std::string, double>> contributions;  // canonical order
};

enum class BipartiteMethod { wootters_exact, ppt, ccnr, best };

/// Which bipartite estimators participate when taking the best applicable one.
struct ProviderSet {
  bool ppt = true;
  bool ccnr = true;
  bool wootters = true;  // only ever applies to 2x2 splits

  static ProviderSet parse(const std::string& csv);  // "ppt,ccnr,wootters" or "best"
  std::string to_string() const;
};

/// Exact two-qubit concurrence max(0, l1-l2-l3-l4), with l_i the decreasing
/// square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).
double wootters_concurrence(const DensityMatrix& rho);

/// Lower bound on the concurrence across a two-block split. For an m x n
/// split (m <= n after sorting) the PPT/CCNR estimate is
///   sqrt(2/(m(m-1))) * max(0, X - 1),
/// X the trace norm of the partial transpose (ppt) or the realignment (ccnr).
/// wootters_exact returns the exact value on 2x2 splits.
BoundReport bipartite_lower_bound(const DensityMatrix& rho, const Partition& split,
                                  BipartiteMethod method);
BoundReport bipartite_lower_bound(const DensityMatrix& rho, const Partition& split,
                                  const ProviderSet& providers);

/// Squared tripartition bound from the three coarse two-block cuts:
///   C^2_{i|j|kl} >= 1/2 (C^2_{i|jkl} + C^2_{ij|kl} + C^2_{ikl|j}),
/// each term a squared bipartite lower bound. P must have block sizes 1,1,2
/// over a four-partite state.
BoundReport tripartition_bound_relation(const DensityMatrix& rho, const Partition& p,
                                        const ProviderSet& providers);

/// How the six tripartite terms of the four-party bound are estimated.
enum class TriMethod { relation, theorem2, best };

/// Four-party lower bound: squared = (1/12)(2 sum of six squared tripartition
/// bounds + sum of three squared 2|2 bipartition bounds).
BoundReport four_party_bound(const DensityMatrix& rho, TriMethod tri_method,
                             const ProviderSet& providers);

/// Principal 8x8 submatrix of a 2x2x4 state on third-index levels {k1,k2},
/// basis order (00k1,00k2,01k1,01k2,10k1,10k2,11k1,11k2); not renormalized.
DensityMatrix substate_mixed(const DensityMatrix& rho, int k1, int k2);

/// 2x2x4 lower bound: squared = (1/3) sum over the six level-pair substates of
/// a squared tripartite bound on each. A substate of trace T is renormalized,
/// bounded by the three-cut relation, and the squared bound rescaled by T^2.
BoundReport level_pair_bound(const DensityMatrix& rho, const ProviderSet& providers);

/// Four-qubit lower bound with every tripartite term expanded through the six
/// level-pair substates of its 2x2x4 coarse graining:
/// squared = (1/12)(sum over tripartitions of (2/3) sum of substate terms
///               + sum of three squared 2|2 bipartition bounds).
BoundReport four_qubit_substate_bound(const DensityMatrix& rho, const ProviderSet& providers);

/// Bipartition-only four-party bound: squared = (1/4) sum over all seven
/// bipartitions of squared bipartite bounds.
BoundReport bipartition_sum_bound(const DensityMatrix& rho, const ProviderSet& providers);

/// Generic weighted bound: squared = sum_P w_P * (squared lower bound of
/// C_P). Refuses schemes whose coverage slack goes negative. Terms for
/// M-block partitions (M >= 3) use the single-block-cut relation
///   C^2_P >= 2^(2-M) sum_i C^2_{B_i | rest}.
BoundReport scheme_bound(const DensityMatrix& rho, const WeightScheme& scheme,
                         const ProviderSet& providers);

}  // namespace qconc
