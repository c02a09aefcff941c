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

#include "linalg.hpp"

#include <Eigen/SVD>

namespace qconc {

namespace {

// Flat-index split against a mask: for every flat index x, the flat index of
// its digits restricted to the subsystems in `m` (mixed-radix over those dims).
std::vector<long> mask_part_index(const SystemShape& shape, SubsetMask m) {
  const long d = shape.total_dim();
  std::vector<long> out(static_cast<size_t>(d));
  for (long x = 0; x < d; ++x) {
    long v = 0;
    for (int s = 1; s <= shape.num_systems(); ++s) {
      if (m & (SubsetMask{1} << (s - 1))) v = v * shape.dims[s - 1] + shape.digit(x, s);
    }
    out[static_cast<size_t>(x)] = v;
  }
  return out;
}

std::vector<int> mask_dims(const SystemShape& shape, SubsetMask m) {
  std::vector<int> dims;
  for (int s = 1; s <= shape.num_systems(); ++s)
    if (m & (SubsetMask{1} << (s - 1))) dims.push_back(shape.dims[s - 1]);
  return dims;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, SubsetMask keep) {
  check_mask(rho.shape, keep, "partial_trace");
  const long d = rho.shape.total_dim();
  const long dk = rho.shape.dim_of(keep);

  const std::vector<long> kept = mask_part_index(rho.shape, keep);
  const std::vector<long> traced = mask_part_index(rho.shape, mask_complement(rho.shape, keep));

  Matrix out = Matrix::Zero(dk, dk);
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c)
      if (traced[r] == traced[c]) out(kept[r], kept[c]) += rho.mat(r, c);

  return density_unchecked(SystemShape(mask_dims(rho.shape, keep)), std::move(out),
                           rho.subnormalized);
}

double purity(const DensityMatrix& rho) { return rho.mat.squaredNorm(); }

double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  double sum = 0.0;
  for (long i = 0; i < svd.singularValues().size(); ++i) {
    const double s = svd.singularValues()(i);
    if (s > kSvdZeroTol) sum += s;
  }
  return sum;
}

Matrix partial_transpose(const DensityMatrix& rho, SubsetMask parts) {
  check_mask(rho.shape, parts, "partial_transpose");
  const long d = rho.shape.total_dim();
  const SystemShape& shape = rho.shape;

  Matrix out(d, d);
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c) {
      long rr = 0, cc = 0;
      for (int s = 1; s <= shape.num_systems(); ++s) {
        const int dr = shape.digit(r, s);
        const int dc = shape.digit(c, s);
        const bool swap = (parts & (SubsetMask{1} << (s - 1))) != 0;
        rr = rr * shape.dims[s - 1] + (swap ? dc : dr);
        cc = cc * shape.dims[s - 1] + (swap ? dr : dc);
      }
      out(rr, cc) = rho.mat(r, c);
    }
  return out;
}

Matrix realign(const DensityMatrix& rho, SubsetMask block_a, SubsetMask block_b) {
  const SystemShape& shape = rho.shape;
  if (block_a == 0 || block_b == 0) throw_domain("realign: blocks must be nonempty");
  if ((block_a & block_b) != 0) throw_domain("realign: blocks overlap");
  if ((block_a | block_b) != shape.full_mask())
    throw_domain("realign: blocks must cover all subsystems");

  const long m = shape.dim_of(block_a);
  const long n = shape.dim_of(block_b);
  const long d = shape.total_dim();
  const std::vector<long> ai = mask_part_index(shape, block_a);
  const std::vector<long> bi = mask_part_index(shape, block_b);

  Matrix out(m * m, n * n);
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c) out(ai[r] * m + ai[c], bi[r] * n + bi[c]) = rho.mat(r, c);
  return out;
}

namespace {

std::vector<long> permutation_index_map(const SystemShape& shape, const std::vector<int>& order) {
  const int n = shape.num_systems();
  if (static_cast<int>(order.size()) != n) throw_domain("permute_systems: order length mismatch");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int s : order) {
    if (s < 1 || s > n || seen[static_cast<size_t>(s)])
      throw_domain("permute_systems: order must be a permutation of 1..N");
    seen[static_cast<size_t>(s)] = true;
  }
  const long d = shape.total_dim();
  std::vector<long> strides(order.size());
  long st = 1;
  for (int t = n - 1; t >= 0; --t) {
    strides[static_cast<size_t>(t)] = st;
    st *= shape.dims[static_cast<size_t>(order[static_cast<size_t>(t)]) - 1];
  }
  std::vector<long> map(static_cast<size_t>(d));
  for (long x = 0; x < d; ++x) {
    long y = 0;
    for (int t = 0; t < n; ++t)
      y += shape.digit(x, order[static_cast<size_t>(t)]) * strides[static_cast<size_t>(t)];
    map[static_cast<size_t>(x)] = y;
  }
  return map;
}

std::vector<int> permuted_dims(const SystemShape& shape, const std::vector<int>& order) {
  std::vector<int> dims;
  dims.reserve(order.size());
  for (int s : order) dims.push_back(shape.dims[static_cast<size_t>(s) - 1]);
  return dims;
}

}  // namespace

PureState permute_systems(const PureState& psi, const std::vector<int>& order) {
  const std::vector<long> map = permutation_index_map(psi.shape, order);
  Vector out(psi.amps.size());
  for (long x = 0; x < psi.amps.size(); ++x) out(map[static_cast<size_t>(x)]) = psi.amps(x);
  return PureState{SystemShape(permuted_dims(psi.shape, order)), std::move(out),
                   psi.subnormalized};
}

DensityMatrix permute_systems(const DensityMatrix& rho, const std::vector<int>& order) {
  const std::vector<long> map = permutation_index_map(rho.shape, order);
  const long d = rho.shape.total_dim();
  Matrix out(d, d);
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c)
      out(map[static_cast<size_t>(r)], map[static_cast<size_t>(c)]) = rho.mat(r, c);
  return density_unchecked(SystemShape(permuted_dims(rho.shape, order)), std::move(out),
                           rho.subnormalized);
}

PureState reshape(const PureState& psi, std::vector<int> dims) {
  SystemShape shape(std::move(dims));
  if (shape.total_dim() != psi.shape.total_dim()) throw_domain("reshape: dimension mismatch");
  return PureState{std::move(shape), psi.amps, psi.subnormalized};
}

DensityMatrix reshape(const DensityMatrix& rho, std::vector<int> dims) {
  SystemShape shape(std::move(dims));
  if (shape.total_dim() != rho.shape.total_dim()) throw_domain("reshape: dimension mismatch");
  return density_unchecked(std::move(shape), rho.mat, rho.subnormalized);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (long i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace qconc
