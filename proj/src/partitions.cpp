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

#include "partitions.hpp"

#include <algorithm>
#include <bit>

namespace qconc {

namespace {

constexpr int kMaxN = 16;      // hard cap for partition arithmetic
constexpr int kMaxEnumN = 10;  // enumeration cap; partition lattices beyond this are out of scope

std::vector<int> mask_elements(SubsetMask m) {
  std::vector<int> out;
  for (int s = 1; s <= 20; ++s)
    if (m & (SubsetMask{1} << (s - 1))) out.push_back(s);
  return out;
}

// Blocks compare as their sorted element lists, shorter-prefix first.
bool block_less(SubsetMask a, SubsetMask b) {
  const std::vector<int> ea = mask_elements(a);
  const std::vector<int> eb = mask_elements(b);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace

Partition::Partition(int n_systems, std::vector<SubsetMask> blocks_in)
    : n(n_systems), blocks(std::move(blocks_in)) {
  if (n < 1 || n > kMaxN) throw_domain("partition: N must be in 1.." + std::to_string(kMaxN));
  if (blocks.empty()) throw_domain("partition: needs at least one block");
  SubsetMask seen = 0;
  for (SubsetMask b : blocks) {
    if (b == 0) throw_domain("partition: empty block");
    if (b & seen) throw_domain("partition: blocks overlap");
    seen |= b;
  }
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  if (seen != full)
    throw_domain("partition: blocks do not cover {1.." + std::to_string(n) + "}");
  // Canonical form: sort blocks by smallest element.
  std::sort(blocks.begin(), blocks.end(),
            [](SubsetMask a, SubsetMask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> out;
  out.reserve(blocks.size());
  for (SubsetMask b : blocks) out.push_back(mask_popcount(b));
  return out;
}

std::vector<int> Partition::size_profile() const {
  std::vector<int> out = block_sizes();
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

std::string Partition::to_string() const {
  std::string out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += '|';
    out += mask_to_string(blocks[i]);
  }
  return out;
}

bool Partition::operator<(const Partition& o) const {
  if (n != o.n) return n < o.n;
  const size_t len = std::min(blocks.size(), o.blocks.size());
  for (size_t i = 0; i < len; ++i) {
    if (blocks[i] != o.blocks[i]) return block_less(blocks[i], o.blocks[i]);
  }
  return blocks.size() < o.blocks.size();
}

Partition parse_partition(const std::string& text, int n) {
  std::vector<SubsetMask> blocks;
  std::string current;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '|') {
      if (current.empty()) throw_domain("partition syntax: empty block in '" + text + "'");
      blocks.push_back(mask_from_string(current, n));
      current.clear();
    } else {
      current += text[i];
    }
  }
  return Partition(n, std::move(blocks));
}

std::vector<Partition> enumerate_partitions(int n, int m) {
  if (n < 1 || n > kMaxEnumN)
    throw_domain("enumerate_partitions: N must be in 1.." + std::to_string(kMaxEnumN));
  if (m < 2 || m > n)
    throw_domain("enumerate_partitions: M must satisfy 2 <= M <= N (got M=" + std::to_string(m) +
                 ", N=" + std::to_string(n) + ")");

  // Restricted growth strings: element 1 goes to block 0; element k may join
  // any existing block or open the next one.
  std::vector<Partition> out;
  std::vector<int> assign(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int elem, int used) -> void {
    if (elem == n) {
      if (used != m) return;
      std::vector<SubsetMask> blocks(static_cast<size_t>(m), 0);
      for (int e = 0; e < n; ++e)
        blocks[static_cast<size_t>(assign[static_cast<size_t>(e)])] |= SubsetMask{1} << e;
      out.emplace_back(n, std::move(blocks));
      return;
    }
    for (int b = 0; b <= used && b < m; ++b) {
      assign[static_cast<size_t>(elem)] = b;
      self(self, elem + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubsetMask> realized_subsets(const Partition& p) {
  const int m = p.num_blocks();
  std::vector<SubsetMask> out;
  if (m < 2) return out;
  out.reserve((size_t{1} << m) - 2);
  for (SubsetMask sel = 1; sel < (SubsetMask{1} << m) - 1; ++sel) {
    SubsetMask u = 0;
    for (int b = 0; b < m; ++b)
      if (sel & (SubsetMask{1} << b)) u |= p.blocks[static_cast<size_t>(b)];
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long stirling2(int n, int m) {
  if (m < 0 || m > n) return 0;
  if (n == 0) return m == 0 ? 1 : 0;
  std::vector<std::vector<long>> s(static_cast<size_t>(n) + 1,
                                   std::vector<long>(static_cast<size_t>(m) + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, m); ++j)
      s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
          static_cast<long>(j) * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
  return s[static_cast<size_t>(n)][static_cast<size_t>(m)];
}

}  // namespace qconc
