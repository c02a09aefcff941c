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

#include "example_family.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

#include <json.hpp>

namespace qconc {

namespace {

constexpr double kDetectionThreshold = 1.0 / 9.0;
constexpr double kBranch2Start = 0.2;
constexpr double kBranch3Start = 0.308051;  // crossover of the z2 and z3 branches
constexpr double kZ4Start = 0.5;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

PureState example_pure_state() {
  Vector amps = Vector::Zero(16);
  // (|0000> + |0011> + |1100> + |1111>)/2
  amps(0b0000) = 0.5;
  amps(0b0011) = 0.5;
  amps(0b1100) = 0.5;
  amps(0b1111) = 0.5;
  return PureState{SystemShape({2, 2, 2, 2}), std::move(amps), false};
}

DensityMatrix rho_example(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw_domain("rho_example: t must lie in [0,1]");
  const PureState psi = example_pure_state();
  Matrix m = Matrix::Identity(16, 16) * ((1.0 - t) / 16.0);
  m += t * (psi.amps * psi.amps.adjoint());
  return density_unchecked(SystemShape({2, 2, 2, 2}), std::move(m), false);
}

ZValues z_formulas(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw_domain("z_formulas: t must lie in [0,1]");
  const double s17 = std::sqrt(17.0);
  ZValues z;
  z.z1 = (5.0 * t - 1.0) * (5.0 * t - 1.0) / 128.0;
  z.z2 = (1.0 - 9.0 * t) * (1.0 - 9.0 * t) * (1.0 + t) * (1.0 + t) / 128.0;
  z.z3 = -(1.0 + t) * (1.0 + t) *
         (5.0 * (-51.0 + 4.0 * s17) * t * t + (26.0 + 4.0 * s17) * t - 3.0) / 256.0;
  const double root_hi = std::sqrt((1.0 + 7.0 * t) / (4.0 * (t + 1.0)));
  const double root_lo = std::sqrt((1.0 - t) / (4.0 * (t + 1.0)));
  const double diff = root_hi - 3.0 * root_lo;
  z.z4 = 3.0 * std::pow(1.0 + t, 4) / 128.0 * diff * diff;
  z.z4_active = t > kZ4Start;
  return z;
}

double z_piecewise(double t) {
  if (t <= kDetectionThreshold) return 0.0;
  const ZValues z = z_formulas(t);
  if (t <= kBranch2Start) return 2.0 * z.z2;
  if (t <= kBranch3Start) return 32.0 * z.z1 + 2.0 * z.z2;
  return 32.0 * z.z1 + z.z2 + z.z3;
}

double assemble_paper_bound(double t) {
  const ZValues z = z_formulas(t);
  const double z4_term = z.z4_active ? z.z4 : 0.0;
  return (2.0 * z_piecewise(t) + z4_term) / 12.0;
}

ExamplePoint evaluate_example_point(double t, const ProviderSet& providers) {
  ExamplePoint p;
  p.t = t;
  p.z = z_formulas(t);
  p.z_piecewise = z_piecewise(t);
  p.bound_sq_paper = assemble_paper_bound(t);
  const DensityMatrix rho = rho_example(t);
  p.bound_sq_engine = four_party_bound(rho, TriMethod::best, providers).squared;
  p.delta_sq = bipartition_sum_bound(rho, providers).squared;
  return p;
}

std::string example_point_to_json(const ExamplePoint& p) {
  nlohmann::ordered_json j;
  j["t"] = p.t;
  j["z1"] = p.z.z1;
  j["z2"] = p.z.z2;
  j["z3"] = p.z.z3;
  j["z4"] = p.z.z4;
  j["z4_active"] = p.z.z4_active;
  j["z_piecewise"] = p.z_piecewise;
  j["bound_sq_paper"] = p.bound_sq_paper;
  j["bound_sq_engine"] = p.bound_sq_engine;
  j["delta_sq"] = p.delta_sq;
  return j.dump();
}

std::vector<ExamplePoint> sweep_example_points(double t_min, double t_max, int steps,
                                               const ProviderSet& providers, int jobs) {
  if (!(0.0 <= t_min && t_min < t_max && t_max <= 1.0))
    throw_domain("sweep: need 0 <= t_min < t_max <= 1");
  if (steps < 2) throw_domain("sweep: need at least 2 steps");

  std::vector<ExamplePoint> rows(static_cast<size_t>(steps));
  int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min(workers, steps);

  std::atomic<int> next{0};
  auto work = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= steps) return;
      const double t = t_min + (t_max - t_min) * i / (steps - 1);
      rows[static_cast<size_t>(i)] = evaluate_example_point(t, providers);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return rows;
}

std::string sweep_csv_header() {
  return "t,z1,z2,z3,z4,z_piecewise,bound_sq_paper,bound_sq_engine,delta_sq";
}

std::string sweep_csv_row(const ExamplePoint& p) {
  std::string row = fmt17(p.t);
  for (double v : {p.z.z1, p.z.z2, p.z.z3, p.z.z4, p.z_piecewise, p.bound_sq_paper,
                   p.bound_sq_engine, p.delta_sq})
    row += "," + fmt17(v);
  return row;
}

void sweep_example(double t_min, double t_max, int steps, const ProviderSet& providers, int jobs,
                   const std::string& out_path) {
  const std::vector<ExamplePoint> rows = sweep_example_points(t_min, t_max, steps, providers, jobs);
  std::ofstream out(out_path);
  if (!out) throw_io("cannot open '" + out_path + "' for writing");
  out << sweep_csv_header() << "\n";
  for (const ExamplePoint& p : rows) out << sweep_csv_row(p) << "\n";
  out.flush();
  if (!out) throw_io("write failed for '" + out_path + "'");
}

}  // namespace qconc
