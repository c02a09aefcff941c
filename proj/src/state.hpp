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

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qconc {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Numeric tolerances shared across the library.
inline constexpr double kPureNormTol = 1e-12;   // |norm - 1| for normalized vectors
inline constexpr double kHermTol = 1e-10;       // max elementwise |rho - rho^dag|
inline constexpr double kPsdTol = 1e-10;        // eigenvalues >= -kPsdTol
inline constexpr double kTraceTol = 1e-10;      // |trace - 1| for normalized matrices
inline constexpr double kSvdZeroTol = 1e-12;    // singular values below this count as zero
inline constexpr double kRadicandTol = 1e-10;   // negative radicand noise floor

enum class ErrorKind { domain, io, numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_domain(const std::string& msg) {
  throw Error(ErrorKind::domain, msg);
}
[[noreturn]] inline void throw_io(const std::string& msg) { throw Error(ErrorKind::io, msg); }
[[noreturn]] inline void throw_numerical(const std::string& msg) {
  throw Error(ErrorKind::numerical, msg);
}

// Subsystem subsets are bitmasks: bit (i-1) <-> subsystem i (1-based).
using SubsetMask = std::uint32_t;

inline int mask_popcount(SubsetMask m) { return std::popcount(m); }

/// Dimensions (d_1,...,d_N) of a tensor-product space. Flat indices are
/// mixed-radix with subsystem 1 as the most significant digit.
struct SystemShape {
  std::vector<int> dims;

  SystemShape() = default;
  explicit SystemShape(std::vector<int> d);

  int num_systems() const { return static_cast<int>(dims.size()); }
  long total_dim() const;
  SubsetMask full_mask() const { return (SubsetMask{1} << num_systems()) - 1; }

  // Product of dims over the subsystems selected by `m`.
  long dim_of(SubsetMask m) const;

  // Stride of subsystem s (1-based) in the flat index.
  long stride(int s) const;

  // Digit of subsystem s (1-based) in flat index x.
  int digit(long x, int s) const { return static_cast<int>(x / stride(s)) % dims[s - 1]; }

  bool operator==(const SystemShape& o) const { return dims == o.dims; }
};

// A nonempty proper subset of {1..N}; throws on violation.
void check_mask(const SystemShape& shape, SubsetMask m, const char* what);

SubsetMask mask_complement(const SystemShape& shape, SubsetMask m);

// Subsets rendered as concatenated 1-based digits, e.g. {1,3,4} -> "134".
std::string mask_to_string(SubsetMask m);
SubsetMask mask_from_string(const std::string& text, int n);

struct PureState {
  SystemShape shape;
  Vector amps;
  bool subnormalized = false;
};

struct DensityMatrix {
  SystemShape shape;
  Matrix mat;
  bool subnormalized = false;
};

// Validating constructors. Normalization shortfalls beyond tolerance flag the
// state subnormalized; excess is an error. Hermiticity/PSD violations name the
// invariant and its magnitude.
PureState make_pure(SystemShape shape, Vector amps);
DensityMatrix make_density(SystemShape shape, Matrix mat);

// Internal fast path: no validation, caller guarantees invariants.
inline DensityMatrix density_unchecked(SystemShape shape, Matrix mat, bool subnormalized) {
  return DensityMatrix{std::move(shape), std::move(mat), subnormalized};
}

DensityMatrix density_from_pure(const PureState& psi);

void require_normalized(const PureState& psi, const char* what);
void require_normalized(const DensityMatrix& rho, const char* what);

}  // namespace qconc
