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

#include "bounds.hpp"

#include <algorithm>
#include <cmath>

#include "concurrence.hpp"
#include "linalg.hpp"

namespace qconc {

namespace {

std::vector<int> mask_elements(SubsetMask m) {
  std::vector<int> out;
  for (int s = 1; s <= 20; ++s)
    if (m & (SubsetMask{1} << (s - 1))) out.push_back(s);
  return out;
}

// Fuse a two-block split into a bipartite (m,n) state, block order preserved.
DensityMatrix fuse_bipartition(const DensityMatrix& rho, SubsetMask a, SubsetMask b) {
  std::vector<int> order = mask_elements(a);
  const std::vector<int> tail = mask_elements(b);
  order.insert(order.end(), tail.begin(), tail.end());
  DensityMatrix permuted = permute_systems(rho, order);
  const int m = static_cast<int>(rho.shape.dim_of(a));
  const int n = static_cast<int>(rho.shape.dim_of(b));
  return reshape(permuted, {m, n});
}

double caf_factor(int m, int n) {
  const int mm = std::min(m, n);
  return std::sqrt(2.0 / (static_cast<double>(mm) * (mm - 1)));
}

double ppt_estimate(const DensityMatrix& fused) {
  const Matrix pt = partial_transpose(fused, SubsetMask{2});  // second factor
  const double x = trace_norm(pt);
  return caf_factor(fused.shape.dims[0], fused.shape.dims[1]) * std::max(0.0, x - 1.0);
}

double ccnr_estimate(const DensityMatrix& fused) {
  const Matrix r = realign(fused, SubsetMask{1}, SubsetMask{2});
  const double x = trace_norm(r);
  return caf_factor(fused.shape.dims[0], fused.shape.dims[1]) * std::max(0.0, x - 1.0);
}

void check_two_blocks(const DensityMatrix& rho, const Partition& split) {
  if (split.n != rho.shape.num_systems())
    throw_domain("bipartite bound: split is over N=" + std::to_string(split.n) +
                 " but the state has N=" + std::to_string(rho.shape.num_systems()));
  if (split.num_blocks() != 2) throw_domain("bipartite bound: split must have exactly two blocks");
}

BoundReport make_report(std::string method, double squared,
                        std::vector<std::pair<std::string, double>> contributions) {
  BoundReport r;
  r.method = std::move(method);
  r.squared = std::max(0.0, squared);
  r.value = std::sqrt(r.squared);
  r.contributions = std::move(contributions);
  return r;
}

}  // namespace

ProviderSet ProviderSet::parse(const std::string& csv) {
  if (csv.empty() || csv == "best") return ProviderSet{};
  ProviderSet p{false, false, false};
  std::string token;
  for (size_t i = 0; i <= csv.size(); ++i) {
    if (i == csv.size() || csv[i] == ',') {
      if (token == "ppt")
        p.ppt = true;
      else if (token == "ccnr")
        p.ccnr = true;
      else if (token == "wootters")
        p.wootters = true;
      else if (!token.empty())
        throw_domain("unknown provider '" + token + "' (expected ppt, ccnr, wootters or best)");
      token.clear();
    } else {
      token += csv[i];
    }
  }
  if (!p.ppt && !p.ccnr && !p.wootters) throw_domain("provider list is empty");
  return p;
}

std::string ProviderSet::to_string() const {
  std::string out;
  if (ppt) out += "ppt";
  if (ccnr) out += std::string(out.empty() ? "" : ",") + "ccnr";
  if (wootters) out += std::string(out.empty() ? "" : ",") + "wootters";
  return out;
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.shape.dims != std::vector<int>{2, 2})
    throw_domain("wootters_concurrence: state must be two qubits (shape 2x2)");
  require_normalized(rho, "wootters_concurrence");

  Matrix f = Matrix::Zero(4, 4);
  f(0, 3) = -1;
  f(1, 2) = 1;
  f(2, 1) = 1;
  f(3, 0) = -1;

  // The spin-flip eigenvalues are the singular values of sqrt(rho) F
  // sqrt(rho)^T; this form keeps rank-deficient states at full precision.
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat);
  Matrix sqrt_rho = Matrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    const double p = std::max(0.0, es.eigenvalues()(i));
    sqrt_rho += std::sqrt(p) * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  const Matrix b = sqrt_rho * f * sqrt_rho.transpose();
  Eigen::JacobiSVD<Matrix> svd(b);
  const auto& sv = svd.singularValues();  // descending
  return std::max(0.0, sv(0) - sv(1) - sv(2) - sv(3));
}

namespace {

double bipartite_value(const DensityMatrix& rho, const Partition& split,
                       const ProviderSet& providers) {
  const DensityMatrix fused = fuse_bipartition(rho, split.blocks[0], split.blocks[1]);
  const bool two_qubit = fused.shape.dims == std::vector<int>{2, 2};

  double best = -1.0;
  if (providers.ppt) best = std::max(best, ppt_estimate(fused));
  if (providers.ccnr) best = std::max(best, ccnr_estimate(fused));
  if (providers.wootters && two_qubit) best = std::max(best, wootters_concurrence(fused));
  if (best < 0.0)
    throw_domain("bipartite bound: no applicable provider for split " + split.to_string() +
                 " (wootters requires a 2x2 split)");
  return best;
}

}  // namespace

BoundReport bipartite_lower_bound(const DensityMatrix& rho, const Partition& split,
                                  BipartiteMethod method) {
  ProviderSet p{false, false, false};
  switch (method) {
    case BipartiteMethod::ppt:
      p.ppt = true;
      break;
    case BipartiteMethod::ccnr:
      p.ccnr = true;
      break;
    case BipartiteMethod::wootters_exact:
      p.wootters = true;
      break;
    case BipartiteMethod::best:
      p = ProviderSet{};
      break;
  }
  return bipartite_lower_bound(rho, split, p);
}

BoundReport bipartite_lower_bound(const DensityMatrix& rho, const Partition& split,
                                  const ProviderSet& providers) {
  check_two_blocks(rho, split);
  require_normalized(rho, "bipartite_lower_bound");
  const double v = bipartite_value(rho, split, providers);
  return make_report("bipartite", v * v, {{split.to_string(), v * v}});
}

namespace {

// C^2_P >= 2^(2-M) sum_i (bipartite bound over block i vs rest)^2 for M >= 3;
// for M = 2 the partition is itself a bipartition.
double partition_relation_sq(const DensityMatrix& rho, const Partition& p,
                             const ProviderSet& providers) {
  const int m = p.num_blocks();
  if (m < 2) return 0.0;
  if (m == 2) {
    const double v = bipartite_value(rho, p, providers);
    return v * v;
  }
  const SubsetMask full = rho.shape.full_mask();
  double sum = 0.0;
  for (SubsetMask block : p.blocks) {
    Partition cut(p.n, {block, full & ~block});
    const double v = bipartite_value(rho, cut, providers);
    sum += v * v;
  }
  return std::pow(2.0, 2 - m) * sum;
}

}  // namespace

BoundReport tripartition_bound_relation(const DensityMatrix& rho, const Partition& p,
                                        const ProviderSet& providers) {
  if (rho.shape.num_systems() != 4)
    throw_domain("tripartition_bound_relation: state must be four-partite");
  require_normalized(rho, "tripartition_bound_relation");
  if (p.size_profile() != std::vector<int>{2, 1, 1})
    throw_domain("tripartition_bound_relation: partition must have block sizes 1,1,2");

  const SubsetMask full = rho.shape.full_mask();
  std::vector<std::pair<std::string, double>> contributions;
  double sum = 0.0;
  for (SubsetMask block : p.blocks) {
    Partition cut(p.n, {block, full & ~block});
    const double v = bipartite_value(rho, cut, providers);
    contributions.emplace_back(cut.to_string(), v * v);
    sum += v * v;
  }
  return make_report("tripartition_relation", 0.5 * sum, std::move(contributions));
}

DensityMatrix substate_mixed(const DensityMatrix& rho, int k1, int k2) {
  if (rho.shape.dims != std::vector<int>{2, 2, 4})
    throw_domain("substate_mixed: state must have shape 2x2x4");
  if (!(0 <= k1 && k1 < k2 && k2 <= 3))
    throw_domain("substate_mixed: selector must satisfy 0 <= k1 < k2 <= 3");

  std::vector<long> rows;
  rows.reserve(8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k : {k1, k2}) rows.push_back(i * 8 + j * 4 + k);

  Matrix out(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      out(r, c) = rho.mat(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(c)]);
  return density_unchecked(SystemShape({2, 2, 2}), std::move(out), true);
}

BoundReport level_pair_bound(const DensityMatrix& rho, const ProviderSet& providers) {
  if (rho.shape.dims != std::vector<int>{2, 2, 4})
    throw_domain("level_pair_bound: state must have shape 2x2x4");
  require_normalized(rho, "level_pair_bound");

  const Partition trivial3 = parse_partition("1|2|3", 3);
  std::vector<std::pair<std::string, double>> contributions;
  double sum = 0.0;
  for (auto [k1, k2] : substate_selectors()) {
    const DensityMatrix sub = substate_mixed(rho, k1, k2);
    const double t = sub.mat.trace().real();
    double term = 0.0;
    if (t > kSvdZeroTol) {
      // Concurrence is homogeneous of degree one in the substate weight: bound
      // the renormalized substate, then scale the squared term by trace^2.
      DensityMatrix normalized = density_unchecked(sub.shape, sub.mat / t, false);
      term = t * t * partition_relation_sq(normalized, trivial3, providers);
    }
    contributions.emplace_back(std::string(1, static_cast<char>('0' + k1)) +
                                   static_cast<char>('0' + k2),
                               term);
    sum += term;
  }
  return make_report("theorem2", sum / 3.0, std::move(contributions));
}

namespace {

// The coarse (2,2,4) view of a four-qubit state under tripartition i|j|kl:
// singleton blocks first, pair block fused last.
bool level_pair_reducible(const DensityMatrix& rho, const Partition& p) {
  if (p.size_profile() != std::vector<int>{2, 1, 1}) return false;
  int pair_dim = 1;
  for (SubsetMask block : p.blocks) {
    const int bd = static_cast<int>(rho.shape.dim_of(block));
    if (mask_popcount(block) == 1) {
      if (bd != 2) return false;
    } else {
      pair_dim = bd;
    }
  }
  return pair_dim == 4;
}

DensityMatrix as_224(const DensityMatrix& rho, const Partition& p) {
  std::vector<int> order;
  std::vector<int> pair;
  for (SubsetMask block : p.blocks) {
    const std::vector<int> elems = mask_elements(block);
    if (elems.size() == 1)
      order.push_back(elems[0]);
    else
      pair = elems;
  }
  order.insert(order.end(), pair.begin(), pair.end());
  return reshape(permute_systems(rho, order), {2, 2, 4});
}

}  // namespace

BoundReport four_party_bound(const DensityMatrix& rho, TriMethod tri_method,
                             const ProviderSet& providers) {
  if (rho.shape.num_systems() != 4) throw_domain("four-party bound: state must be four-partite");
  require_normalized(rho, "four_party_bound");

  std::vector<std::pair<std::string, double>> contributions;
  double tri_sum = 0.0;
  for (const Partition& p : enumerate_partitions(4, 3)) {
    const bool reducible = level_pair_reducible(rho, p);
    double term = 0.0;
    switch (tri_method) {
      case TriMethod::relation:
        term = tripartition_bound_relation(rho, p, providers).squared;
        break;
      case TriMethod::theorem2:
        if (!reducible)
          throw_domain("four-party bound: tripartition " + p.to_string() +
                       " is not 2x2x4-reducible");
        term = level_pair_bound(as_224(rho, p), providers).squared;
        break;
      case TriMethod::best:
        term = tripartition_bound_relation(rho, p, providers).squared;
        if (reducible)
          term = std::max(term, level_pair_bound(as_224(rho, p), providers).squared);
        break;
    }
    contributions.emplace_back(p.to_string(), term);
    tri_sum += term;
  }

  double bi_sum = 0.0;
  for (const Partition& p : enumerate_partitions(4, 2)) {
    if (p.size_profile() != std::vector<int>{2, 2}) continue;
    const double v = bipartite_value(rho, p, providers);
    contributions.emplace_back(p.to_string(), v * v);
    bi_sum += v * v;
  }

  return make_report("theorem1", (2.0 * tri_sum + bi_sum) / 12.0, std::move(contributions));
}

BoundReport four_qubit_substate_bound(const DensityMatrix& rho, const ProviderSet& providers) {
  if (rho.shape.dims != std::vector<int>{2, 2, 2, 2})
    throw_domain("four-qubit substate bound: state must have shape 2x2x2x2");
  require_normalized(rho, "four_qubit_substate_bound");

  std::vector<std::pair<std::string, double>> contributions;
  double tri_sum = 0.0;
  for (const Partition& p : enumerate_partitions(4, 3)) {
    // (2/3) * sum of substate terms = 2 * the level-pair bound's squared value.
    const double term = 2.0 * level_pair_bound(as_224(rho, p), providers).squared;
    contributions.emplace_back(p.to_string(), term);
    tri_sum += term;
  }

  double bi_sum = 0.0;
  for (const Partition& p : enumerate_partitions(4, 2)) {
    if (p.size_profile() != std::vector<int>{2, 2}) continue;
    const double v = bipartite_value(rho, p, providers);
    contributions.emplace_back(p.to_string(), v * v);
    bi_sum += v * v;
  }

  return make_report("corollary1", (tri_sum + bi_sum) / 12.0, std::move(contributions));
}

BoundReport bipartition_sum_bound(const DensityMatrix& rho, const ProviderSet& providers) {
  if (rho.shape.num_systems() != 4)
    throw_domain("bipartition-sum bound: state must be four-partite");
  require_normalized(rho, "bipartition_sum_bound");

  std::vector<std::pair<std::string, double>> contributions;
  double sum = 0.0;
  for (const Partition& p : enumerate_partitions(4, 2)) {
    const double v = bipartite_value(rho, p, providers);
    contributions.emplace_back(p.to_string(), v * v);
    sum += v * v;
  }
  return make_report("delta", sum / 4.0, std::move(contributions));
}

BoundReport scheme_bound(const DensityMatrix& rho, const WeightScheme& scheme,
                         const ProviderSet& providers) {
  const int n = rho.shape.num_systems();
  require_normalized(rho, "scheme_bound");
  const SlackReport slack = verify_weights(n, scheme);
  if (!slack.valid)
    throw_domain("scheme refused: coverage slack for subset " +
                 mask_to_string(slack.worst_subset) + " is " +
                 to_fraction_string(slack.min_slack) + " (< 0)");

  std::vector<std::pair<std::string, double>> contributions;
  double total = 0.0;
  for (const auto& [p, w] : scheme.entries) {
    const double term = partition_relation_sq(rho, p, providers);
    contributions.emplace_back(p.to_string(), term);
    total += to_double(w) * term;
  }
  return make_report("scheme", total, std::move(contributions));
}

}  // namespace qconc
