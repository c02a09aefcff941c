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

#include "bounds.hpp"
#include "state.hpp"

namespace qconc {

// One-parameter four-qubit family: white noise mixed into the pair-of-Bell-
// pairs state (|0000> + |0011> + |1100> + |1111>)/2.

/// The family's pure component.
PureState example_pure_state();

/// rho(t) = (1-t)/16 I + t |psi><psi| on shape (2,2,2,2), t in [0,1].
DensityMatrix rho_example(double t);

struct ZValues {
  double z1 = 0, z2 = 0, z3 = 0, z4 = 0;
  bool z4_active = false;  // the z4 closed form certifies a bound only for t > 0.5
};

/// Closed-form ingredients of the family's analytical bound:
///   z1 = (5t-1)^2/128
///   z2 = (1-9t)^2 (1+t)^2 / 128
///   z3 = -(1+t)^2 [5(-51+4 sqrt 17) t^2 + (26+4 sqrt 17) t - 3] / 256
///   z4 = 3(1+t)^4/128 (sqrt((1+7t)/(4(t+1))) - 3 sqrt((1-t)/(4(t+1))))^2
ZValues z_formulas(double t);

/// Piecewise closed-form lower bound on the sum of the six squared
/// tripartition concurrences:
///   0                 for t <= 1/9
///   2 z2              for t in (1/9, 0.2]
///   32 z1 + 2 z2      for t in (0.2, 0.308051]
///   32 z1 + z2 + z3   for t in (0.308051, 1]
double z_piecewise(double t);

/// Squared lower bound on C_4^2(rho(t)) assembled from the closed forms:
///   (1/12) (2 Z(t) + z4(t) [t > 0.5]).
double assemble_paper_bound(double t);

struct ExamplePoint {
  double t = 0;
  ZValues z;
  double z_piecewise = 0;
  double bound_sq_paper = 0;
  double bound_sq_engine = 0;  // four-party bound of rho(t), best tripartite terms
  double delta_sq = 0;         // bipartition-sum bound of rho(t)
};

ExamplePoint evaluate_example_point(double t, const ProviderSet& providers);

std::string example_point_to_json(const ExamplePoint& p);

/// Evaluate the family on a uniform grid and write CSV with header
/// t,z1,z2,z3,z4,z_piecewise,bound_sq_paper,bound_sq_engine,delta_sq
/// (17 significant digits per field). jobs <= 0 means hardware concurrency.
void sweep_example(double t_min, double t_max, int steps, const ProviderSet& providers, int jobs,
                   const std::string& out_path);

/// Same grid evaluation without the file, rows in grid order.
std::vector<ExamplePoint> sweep_example_points(double t_min, double t_max, int steps,
                                               const ProviderSet& providers, int jobs);

std::string sweep_csv_header();
std::string sweep_csv_row(const ExamplePoint& p);

}  // namespace qconc
