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

#include "state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qconc {

namespace {
constexpr long kMaxTotalDim = 4096;  // ~12 qubits; larger systems are out of scope
}

SystemShape::SystemShape(std::vector<int> d) : dims(std::move(d)) {
  if (dims.empty()) throw_domain("system shape must have at least one subsystem");
  if (dims.size() > 20) throw_domain("too many subsystems (limit 20)");
  long total = 1;
  for (int di : dims) {
    if (di < 1) throw_domain("subsystem dimensions must be positive");
    total *= di;
    if (total > kMaxTotalDim) throw_domain("total dimension exceeds supported limit 4096");
  }
}

long SystemShape::total_dim() const {
  long total = 1;
  for (int d : dims) total *= d;
  return total;
}

long SystemShape::dim_of(SubsetMask m) const {
  long d = 1;
  for (int s = 1; s <= num_systems(); ++s)
    if (m & (SubsetMask{1} << (s - 1))) d *= dims[s - 1];
  return d;
}

long SystemShape::stride(int s) const {
  long st = 1;
  for (int t = s + 1; t <= num_systems(); ++t) st *= dims[t - 1];
  return st;
}

void check_mask(const SystemShape& shape, SubsetMask m, const char* what) {
  const SubsetMask full = shape.full_mask();
  if (m == 0) throw_domain(std::string(what) + ": subset must be nonempty");
  if ((m & ~full) != 0) throw_domain(std::string(what) + ": subset references missing subsystems");
  if (m == full) throw_domain(std::string(what) + ": subset must be proper");
}

SubsetMask mask_complement(const SystemShape& shape, SubsetMask m) {
  return shape.full_mask() & ~m;
}

std::string mask_to_string(SubsetMask m) {
  std::string out;
  for (int s = 1; s <= 20; ++s)
    if (m & (SubsetMask{1} << (s - 1))) out += static_cast<char>('0' + s);
  return out;
}

SubsetMask mask_from_string(const std::string& text, int n) {
  SubsetMask m = 0;
  for (char c : text) {
    if (c < '1' || c > '9') throw_domain("subset syntax: expected digits 1-9, got '" + std::string(1, c) + "'");
    int s = c - '0';
    if (s > n) throw_domain("subset references subsystem " + std::to_string(s) + " beyond N=" + std::to_string(n));
    SubsetMask bit = SubsetMask{1} << (s - 1);
    if (m & bit) throw_domain("subset lists subsystem " + std::to_string(s) + " twice");
    m |= bit;
  }
  if (m == 0) throw_domain("subset must be nonempty");
  return m;
}

PureState make_pure(SystemShape shape, Vector amps) {
  if (amps.size() != shape.total_dim())
    throw_domain("amplitude vector length " + std::to_string(amps.size()) +
                 " does not match total dimension " + std::to_string(shape.total_dim()));
  const double norm = amps.norm();
  if (norm > 1.0 + kPureNormTol)
    throw_domain("pure state norm " + std::to_string(norm) + " exceeds 1 (tolerance 1e-12)");
  if (norm <= 0.0) throw_domain("pure state has zero norm");
  PureState psi{std::move(shape), std::move(amps), false};
  psi.subnormalized = norm < 1.0 - kPureNormTol;
  return psi;
}

DensityMatrix make_density(SystemShape shape, Matrix mat) {
  const long d = shape.total_dim();
  if (mat.rows() != d || mat.cols() != d)
    throw_domain("matrix is " + std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
                 " but total dimension is " + std::to_string(d));

  double herm_dev = 0.0;
  long hr = 0, hc = 0;
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c) {
      double dev = std::abs(mat(r, c) - std::conj(mat(c, r)));
      if (dev > herm_dev) {
        herm_dev = dev;
        hr = r;
        hc = c;
      }
    }
  if (herm_dev > kHermTol) {
    std::ostringstream os;
    os << "hermiticity violation: max |rho - rho^dagger| = " << herm_dev << " at (" << hr << ","
       << hc << "), tolerance " << kHermTol;
    throw_domain(os.str());
  }

  Eigen::SelfAdjointEigenSolver<Matrix> es(mat);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    std::ostringstream os;
    os << "positivity violation: min eigenvalue = " << min_eig << ", tolerance -" << kPsdTol;
    throw_domain(os.str());
  }

  const double tr = mat.trace().real();
  if (tr <= 0.0) throw_domain("trace violation: trace = " + std::to_string(tr) + " (must be > 0)");
  if (tr > 1.0 + kTraceTol) {
    std::ostringstream os;
    os << "trace violation: trace = " << tr << " exceeds 1, tolerance " << kTraceTol;
    throw_domain(os.str());
  }

  DensityMatrix rho{std::move(shape), std::move(mat), tr < 1.0 - kTraceTol};
  return rho;
}

DensityMatrix density_from_pure(const PureState& psi) {
  Matrix m = psi.amps * psi.amps.adjoint();
  return density_unchecked(psi.shape, std::move(m), psi.subnormalized);
}

void require_normalized(const PureState& psi, const char* what) {
  if (psi.subnormalized || std::abs(psi.amps.norm() - 1.0) > 1e-9)
    throw_domain(std::string(what) + ": requires a normalized pure state");
}

void require_normalized(const DensityMatrix& rho, const char* what) {
  if (rho.subnormalized || std::abs(rho.mat.trace().real() - 1.0) > 1e-9)
    throw_domain(std::string(what) + ": requires a normalized density matrix");
}

}  // namespace qconc
