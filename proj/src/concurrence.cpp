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

#include "concurrence.hpp"

#include <cmath>

#include "linalg.hpp"

namespace qconc {

namespace {

ConcurrenceValue from_radicand(double radicand, double prefactor_sq, const char* what) {
  if (radicand < -kRadicandTol)
    throw_numerical(std::string(what) + ": purity sum exceeds its cap by " +
                    std::to_string(-radicand) + " (beyond the 1e-10 noise floor)");
  if (radicand < 0) radicand = 0;
  ConcurrenceValue out;
  out.squared = prefactor_sq * radicand;
  out.value = std::sqrt(out.squared);
  return out;
}

double purity_of_subset(const DensityMatrix& rho, SubsetMask a) {
  return purity(partial_trace(rho, a));
}

}  // namespace

ConcurrenceValue concurrence_full(const PureState& psi) {
  require_normalized(psi, "concurrence_full");
  const int n = psi.shape.num_systems();
  if (n < 2) throw_domain("concurrence_full: need at least two subsystems");
  for (int d : psi.shape.dims)
    if (d < 2) throw_domain("concurrence_full: all subsystem dimensions must be >= 2");

  const DensityMatrix rho = density_from_pure(psi);
  const SubsetMask full = psi.shape.full_mask();

  // Tr(rho_a^2) = Tr(rho_abar^2) on pure states: contract only subsets
  // containing subsystem 1 and count each twice.
  double purity_sum = 0.0;
  for (SubsetMask a = 1; a < full; a += 2) purity_sum += 2.0 * purity_of_subset(rho, a);

  const double radicand = static_cast<double>((long{1} << n) - 2) - purity_sum;
  const double prefactor_sq = std::pow(2.0, 2 - n);
  return from_radicand(radicand, prefactor_sq, "concurrence_full");
}

ConcurrenceValue concurrence_partition(const PureState& psi, const Partition& p) {
  require_normalized(psi, "concurrence_partition");
  if (p.n != psi.shape.num_systems())
    throw_domain("concurrence_partition: partition is over N=" + std::to_string(p.n) +
                 " but the state has N=" + std::to_string(psi.shape.num_systems()));
  const int m = p.num_blocks();
  if (m < 2) return ConcurrenceValue{0.0, 0.0};

  const DensityMatrix rho = density_from_pure(psi);

  // Complement pairs again: block unions containing block 1 stand in for both.
  double purity_sum = 0.0;
  for (SubsetMask sel = 1; sel < (SubsetMask{1} << m) - 1; sel += 2) {
    SubsetMask a = 0;
    for (int b = 0; b < m; ++b)
      if (sel & (SubsetMask{1} << b)) a |= p.blocks[static_cast<size_t>(b)];
    purity_sum += 2.0 * purity_of_subset(rho, a);
  }

  const double radicand = static_cast<double>((long{1} << m) - 2) - purity_sum;
  const double prefactor_sq = std::pow(2.0, 2 - m);
  return from_radicand(radicand, prefactor_sq, "concurrence_partition");
}

double amplitude_form_squared(const PureState& psi) {
  const auto& dims = psi.shape.dims;
  if (dims.size() != 3 || dims[0] != 2 || dims[1] != 2 || dims[2] < 2)
    throw_domain("amplitude form: state must have shape 2x2xd with d >= 2");
  const int dc = dims[2];

  const auto a = [&](int i, int j, int k) -> cxd { return psi.amps((i * 2 + j) * dc + k); };

  double sum = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int p = 0; p < 2; ++p)
      for (int j = 0; j < 2; ++j)
        for (int q = 0; q < 2; ++q)
          for (int k = 0; k < dc; ++k)
            for (int m = 0; m < dc; ++m) {
              const cxd base = a(i, j, k) * a(p, q, m);
              sum += std::norm(base - a(i, j, m) * a(p, q, k));
              sum += std::norm(base - a(i, q, k) * a(p, j, m));
              sum += std::norm(base - a(p, j, k) * a(i, q, m));
            }
  return 0.5 * sum;
}

ConcurrenceValue concurrence_224_coefficient(const PureState& psi) {
  if (psi.shape.dims != std::vector<int>{2, 2, 4})
    throw_domain("concurrence_224_coefficient: state must have shape 2x2x4");
  ConcurrenceValue out;
  out.squared = amplitude_form_squared(psi);
  out.value = std::sqrt(out.squared);
  return out;
}

std::vector<std::pair<int, int>> substate_selectors() {
  return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
}

PureState substate_pure(const PureState& psi, int k1, int k2) {
  if (psi.shape.dims != std::vector<int>{2, 2, 4})
    throw_domain("substate_pure: state must have shape 2x2x4");
  if (!(0 <= k1 && k1 < k2 && k2 <= 3))
    throw_domain("substate_pure: selector must satisfy 0 <= k1 < k2 <= 3");

  Vector amps(8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      amps(i * 4 + j * 2 + 0) = psi.amps(i * 8 + j * 4 + k1);
      amps(i * 4 + j * 2 + 1) = psi.amps(i * 8 + j * 4 + k2);
    }
  PureState out{SystemShape({2, 2, 2}), std::move(amps), false};
  out.subnormalized = out.amps.norm() < 1.0 - kPureNormTol;
  return out;
}

}  // namespace qconc
