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
#include <random>

#include "state.hpp"

namespace qconc {

// Gaussian samples via Box-Muller over mt19937_64, so that a seed produces
// the same stream on every platform (std::normal_distribution does not
// guarantee that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform();   // (0,1]
  double gaussian();  // standard normal
  cxd complex_gaussian();
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-distributed unit vector on the given shape; deterministic per seed.
PureState random_pure(const SystemShape& shape, std::uint64_t seed);

PureState random_pure(const SystemShape& shape, Rng& rng);

/// Haar-distributed d x d unitary (QR of a complex Ginibre matrix with the
/// phase convention fixed by a positive diagonal of R).
Matrix random_unitary(int d, Rng& rng);

/// Mixture of `rank` Haar pure states with uniform-random mixing weights.
DensityMatrix random_mixed(const SystemShape& shape, int rank, Rng& rng);

/// Product pure state: an independent Haar vector on every subsystem.
PureState random_product_pure(const SystemShape& shape, Rng& rng);

/// Mixture of `terms` random product states; separable by construction.
DensityMatrix random_product_mixture(const SystemShape& shape, int terms, Rng& rng);

}  // namespace qconc
