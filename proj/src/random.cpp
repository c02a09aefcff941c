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

#include "random.hpp"

#include <cmath>
#include <numbers>

#include "linalg.hpp"

namespace qconc {

double Rng::uniform() {
  // 53-bit mantissa, mapped to (0,1] so log() is always finite.
  return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

cxd Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

PureState random_pure(const SystemShape& shape, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(shape, rng);
}

PureState random_pure(const SystemShape& shape, Rng& rng) {
  const long d = shape.total_dim();
  Vector v(d);
  for (long i = 0; i < d; ++i) v(i) = rng.complex_gaussian();
  v /= v.norm();
  return PureState{shape, std::move(v), false};
}

Matrix random_unitary(int d, Rng& rng) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    cxd rii = r(i, i);
    cxd phase = std::abs(rii) > 0 ? rii / std::abs(rii) : cxd(1, 0);
    q.col(i) *= phase;
  }
  return q;
}

DensityMatrix random_mixed(const SystemShape& shape, int rank, Rng& rng) {
  if (rank < 1) throw_domain("random_mixed: rank must be >= 1");
  const long d = shape.total_dim();
  std::vector<double> w(static_cast<size_t>(rank));
  double total = 0.0;
  for (double& x : w) {
    x = rng.uniform();
    total += x;
  }
  Matrix m = Matrix::Zero(d, d);
  for (int k = 0; k < rank; ++k) {
    PureState psi = random_pure(shape, rng);
    m += (w[static_cast<size_t>(k)] / total) * (psi.amps * psi.amps.adjoint());
  }
  return density_unchecked(shape, std::move(m), false);
}

PureState random_product_pure(const SystemShape& shape, Rng& rng) {
  Vector v = Vector::Ones(1);
  for (int d : shape.dims) {
    Vector f(d);
    for (int i = 0; i < d; ++i) f(i) = rng.complex_gaussian();
    f /= f.norm();
    v = kron(v, f);
  }
  return PureState{shape, std::move(v), false};
}

DensityMatrix random_product_mixture(const SystemShape& shape, int terms, Rng& rng) {
  if (terms < 1) throw_domain("random_product_mixture: need at least one term");
  const long d = shape.total_dim();
  std::vector<double> w(static_cast<size_t>(terms));
  double total = 0.0;
  for (double& x : w) {
    x = rng.uniform();
    total += x;
  }
  Matrix m = Matrix::Zero(d, d);
  for (int k = 0; k < terms; ++k) {
    PureState psi = random_product_pure(shape, rng);
    m += (w[static_cast<size_t>(k)] / total) * (psi.amps * psi.amps.adjoint());
  }
  return density_unchecked(shape, std::move(m), false);
}

}  // namespace qconc
