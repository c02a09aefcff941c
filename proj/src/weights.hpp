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

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "partitions.hpp"

namespace qconc {

// Weight bookkeeping is exact: binding coverage constraints sit at slack 0,
// where floating point cannot certify feasibility.
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);
std::string to_fraction_string(const Rational& r);
Rational rational_from_double(double x);  // exact value of the binary64 input

/// Nonnegative weights attached to partitions of a common {1..N}.
struct WeightScheme {
  int n = 0;
  std::vector<std::pair<Partition, Rational>> entries;  // canonical partition order, unique keys

  void add(const Partition& p, const Rational& w);
};

struct SlackReport {
  int n = 0;
  // Slack per nonempty proper subset, ascending mask order:
  //   slack(a) = 2^(2-N) - sum_P w_P 2^(2-M_P) [a realized by P].
  std::vector<std::pair<SubsetMask, Rational>> slacks;
  bool valid = false;       // all slacks >= 0
  bool tight = false;       // all slacks == 0 (pure-state equality)
  Rational min_slack = 0;
  SubsetMask worst_subset = 0;
};

/// Coverage condition for a candidate lower-bound scheme. A scheme with all
/// slacks >= 0 certifies sum_P w_P C_P^2(rho) as a lower bound on C_N^2(rho);
/// all slacks == 0 gives equality on pure states.
SlackReport verify_weights(int n, const WeightScheme& scheme);

enum class ComposeObjective { max_uniform, max_total };

struct ComposeResult {
  WeightScheme scheme;
  Rational total_weight = 0;
  bool profile_uniform = false;  // a per-size-profile uniform scheme attains total_weight
};

/// Valid weights for the given partition family, maximal under the objective.
///   max_uniform: one weight per block-size profile, maximized profile by
///     profile (finer partitions first); deterministic.
///   max_total:   maximize the weight sum by exact rational simplex.
/// Partitions realizing no subsets get weight zero.
ComposeResult compose_weights(int n, const std::vector<Partition>& family,
                              ComposeObjective objective);

// Named schemes used throughout.
WeightScheme four_party_theorem_scheme();  // 1/6 per tripartition, 1/12 per 2|2 bipartition
WeightScheme four_party_bipartition_scheme();  // 1/4 per bipartition of {1..4}

// JSON round-trip: {"n": N, "weights": {"1|2|34": [1,6], ...}}. Weights may be
// [num,den] pairs, integers, decimal numbers (taken at their exact binary64
// value) or "num/den" strings.
WeightScheme scheme_from_json(const std::string& text);
std::string scheme_to_json(const WeightScheme& scheme);

std::string slack_report_to_json(const SlackReport& report);

}  // namespace qconc
