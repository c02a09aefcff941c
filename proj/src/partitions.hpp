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

#include "state.hpp"

namespace qconc {

/// A set partition of {1..N} into disjoint nonempty blocks. Canonical form:
/// blocks ordered by their smallest element.
struct Partition {
  int n = 0;
  std::vector<SubsetMask> blocks;

  Partition() = default;
  Partition(int n_systems, std::vector<SubsetMask> blocks_in);  // canonicalizes, validates

  int num_blocks() const { return static_cast<int>(blocks.size()); }

  // Block sizes in canonical block order.
  std::vector<int> block_sizes() const;

  // Multiset of block sizes, descending; partitions with equal profiles play
  // symmetric roles in uniform weight schemes.
  std::vector<int> size_profile() const;

  std::string to_string() const;  // e.g. "1|24|3"

  bool operator==(const Partition& o) const { return n == o.n && blocks == o.blocks; }
  bool operator<(const Partition& o) const;  // canonical order (see cpp)
};

/// Parse "1|24|3" against N subsystems; rejects overlap and incompleteness.
Partition parse_partition(const std::string& text, int n);

/// All partitions of {1..N} into exactly M blocks, canonical order.
/// Count equals the Stirling number S(N,M).
std::vector<Partition> enumerate_partitions(int n, int m);

/// The nonempty proper subsets of {1..N} expressible as unions of P's blocks;
/// 2^M - 2 of them, ascending mask order.
std::vector<SubsetMask> realized_subsets(const Partition& p);

/// Stirling numbers of the second kind (reference values for enumeration).
long stirling2(int n, int m);

}  // namespace qconc
