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

#include "selftest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "example_family.hpp"
#include "linalg.hpp"
#include "random.hpp"

namespace qconc {

double scheme_pure_squared(const PureState& psi, const WeightScheme& scheme) {
  double total = 0.0;
  for (const auto& [p, w] : scheme.entries)
    total += to_double(w) * concurrence_partition(psi, p).squared;
  return total;
}

double four_party_pure_identity_dev(int n_states, std::uint64_t seed) {
  Rng rng(seed);
  const SystemShape shape({2, 2, 2, 2});
  const WeightScheme scheme = four_party_theorem_scheme();
  double worst = 0.0;
  for (int i = 0; i < n_states; ++i) {
    const PureState psi = random_pure(shape, rng);
    const double lhs = concurrence_full(psi).squared;
    const double rhs = scheme_pure_squared(psi, scheme);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double level_pair_pure_slack(int n_states, std::uint64_t seed) {
  Rng rng(seed);
  const SystemShape shape({2, 2, 4});
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_states; ++i) {
    const PureState psi = random_pure(shape, rng);
    const double full = concurrence_224_coefficient(psi).squared;
    double sub_sum = 0.0;
    for (auto [k1, k2] : substate_selectors())
      sub_sum += amplitude_form_squared(substate_pure(psi, k1, k2));
    worst = std::min(worst, full - sub_sum / 3.0);
  }
  return worst;
}

double amplitude_form_dev(int n_states, std::uint64_t seed) {
  Rng rng(seed);
  const SystemShape shape({2, 2, 4});
  const Partition trivial3 = parse_partition("1|2|3", 3);
  double worst = 0.0;
  for (int i = 0; i < n_states; ++i) {
    const PureState psi = random_pure(shape, rng);
    const double a = concurrence_224_coefficient(psi).squared;
    const double b = concurrence_partition(psi, trivial3).squared;
    worst = std::max(worst, std::abs(a - b));
  }
  return worst;
}

double singleton_partition_dev(const SystemShape& shape, int n_states, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SubsetMask> singleton_blocks;
  for (int s = 0; s < shape.num_systems(); ++s) singleton_blocks.push_back(SubsetMask{1} << s);
  const Partition singletons(shape.num_systems(), singleton_blocks);
  double worst = 0.0;
  for (int i = 0; i < n_states; ++i) {
    const PureState psi = random_pure(shape, rng);
    const double a = concurrence_full(psi).squared;
    const double b = concurrence_partition(psi, singletons).squared;
    worst = std::max(worst, std::abs(a - b));
  }
  return worst;
}

double hierarchy_slack(int n_states, std::uint64_t seed, const ProviderSet& providers) {
  Rng rng(seed);
  const SystemShape shape({2, 2, 2, 2});
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_states; ++i) {
    const int rank = 1 + static_cast<int>(rng.raw() % 4);
    const DensityMatrix rho = random_mixed(shape, rank, rng);
    const double upper = four_party_bound(rho, TriMethod::relation, providers).squared;
    const double lower = bipartition_sum_bound(rho, providers).squared;
    worst = std::min(worst, upper - lower);
  }
  return worst;
}

double two_qubit_soundness_gap(int n_states, std::uint64_t seed) {
  Rng rng(seed);
  const SystemShape shape({2, 2});
  const Partition split = parse_partition("1|2", 2);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_states; ++i) {
    const int rank = 1 + static_cast<int>(rng.raw() % 4);
    const DensityMatrix rho = random_mixed(shape, rank, rng);
    const double exact = wootters_concurrence(rho);
    for (BipartiteMethod m : {BipartiteMethod::ppt, BipartiteMethod::ccnr, BipartiteMethod::best})
      worst = std::max(worst, bipartite_lower_bound(rho, split, m).value - exact);
  }
  return worst;
}

double separable_bound_ceiling(int n_mixtures, std::uint64_t seed) {
  Rng rng(seed);
  const SystemShape four_qubits({2, 2, 2, 2});
  const SystemShape shape224({2, 2, 4});
  const ProviderSet providers;
  double worst = 0.0;
  for (int i = 0; i < n_mixtures; ++i) {
    const int terms = 2 + static_cast<int>(rng.raw() % 6);
    const DensityMatrix rho = random_product_mixture(four_qubits, terms, rng);
    worst = std::max(worst, four_party_bound(rho, TriMethod::best, providers).value);
    worst = std::max(worst, bipartition_sum_bound(rho, providers).value);
    worst = std::max(worst, four_qubit_substate_bound(rho, providers).value);
    const DensityMatrix sep224 = random_product_mixture(shape224, terms, rng);
    worst = std::max(worst, level_pair_bound(sep224, providers).value);
  }
  return worst;
}

double pure_soundness_gap(int n_states, std::uint64_t seed) {
  Rng rng(seed);
  const SystemShape shape({2, 2, 2, 2});
  const ProviderSet providers;
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_states; ++i) {
    const PureState psi = random_pure(shape, rng);
    const DensityMatrix rho = density_from_pure(psi);
    const double exact = concurrence_full(psi).squared;
    worst = std::max(worst, four_party_bound(rho, TriMethod::best, providers).squared - exact);
    worst = std::max(worst, bipartition_sum_bound(rho, providers).squared - exact);
    worst = std::max(worst, four_qubit_substate_bound(rho, providers).squared - exact);
  }
  return worst;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string& name, bool pass, const std::string& detail) {
    results.push_back({name, pass, detail});
  }
};

void qstate_checks(Suite& suite, std::uint64_t seed) {
  Rng rng(seed);

  // Partial trace: trace/hermiticity preserved, complement purities agree.
  double trace_dev = 0.0, herm_dev = 0.0, purity_dev = 0.0;
  for (int i = 0; i < 40; ++i) {
    const SystemShape shape = (i % 2 == 0) ? SystemShape({2, 2, 2, 2}) : SystemShape({2, 3, 2});
    const PureState psi = random_pure(shape, rng);
    const DensityMatrix rho = density_from_pure(psi);
    const SubsetMask full = shape.full_mask();
    for (SubsetMask a = 1; a < full; ++a) {
      const DensityMatrix ra = partial_trace(rho, a);
      trace_dev = std::max(trace_dev, std::abs(ra.mat.trace().real() - 1.0));
      herm_dev = std::max(herm_dev, (ra.mat - ra.mat.adjoint()).cwiseAbs().maxCoeff());
      const DensityMatrix rb = partial_trace(rho, mask_complement(shape, a));
      purity_dev = std::max(purity_dev, std::abs(purity(ra) - purity(rb)));
    }
  }
  suite.check("partial-trace-preservation", trace_dev < 1e-12 && herm_dev < 1e-12,
              "max trace dev " + fmt(trace_dev) + ", max herm dev " + fmt(herm_dev));
  suite.check("complement-purity-equality", purity_dev < 1e-10, "max dev " + fmt(purity_dev));

  // Trace norm is unitarily invariant.
  double tn_dev = 0.0;
  for (int i = 0; i < 20; ++i) {
    Matrix m(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = rng.complex_gaussian();
    const Matrix u = random_unitary(4, rng);
    const Matrix v = random_unitary(4, rng);
    tn_dev = std::max(tn_dev, std::abs(trace_norm(u * m * v) - trace_norm(m)));
  }
  suite.check("trace-norm-unitary-invariance", tn_dev < 1e-9, "max dev " + fmt(tn_dev));

  // Partial transpose is an involution.
  double pt_dev = 0.0;
  for (int i = 0; i < 20; ++i) {
    const SystemShape shape({2, 2, 2});
    const DensityMatrix rho = random_mixed(shape, 3, rng);
    const SubsetMask parts = 1 + static_cast<SubsetMask>(rng.raw() % (shape.full_mask() - 1));
    const Matrix once = partial_transpose(rho, parts);
    const Matrix twice =
        partial_transpose(density_unchecked(shape, once, rho.subnormalized), parts);
    pt_dev = std::max(pt_dev, (twice - rho.mat).cwiseAbs().maxCoeff());
  }
  suite.check("partial-transpose-involution", pt_dev < 1e-15, "max dev " + fmt(pt_dev));

  // Purity range for normalized states.
  bool purity_ok = true;
  for (int i = 0; i < 30; ++i) {
    const SystemShape shape({2, 2, 2});
    const DensityMatrix rho = random_mixed(shape, 1 + static_cast<int>(rng.raw() % 8), rng);
    const double p = purity(rho);
    purity_ok = purity_ok && p >= 1.0 / 8.0 - 1e-12 && p <= 1.0 + 1e-12;
  }
  suite.check("purity-range", purity_ok, "Tr(rho^2) within [1/D, 1] on random mixtures");

  // Haar sampler basics.
  const PureState a = random_pure(SystemShape({2, 2}), std::uint64_t{7});
  const PureState b = random_pure(SystemShape({2, 2}), std::uint64_t{8});
  const bool haar_ok =
      std::abs(a.amps.norm() - 1.0) < 1e-12 && (a.amps - b.amps).norm() > 1e-6;
  suite.check("haar-sampler", haar_ok, "unit norm, distinct seeds differ");
}

void partition_checks(Suite& suite, std::uint64_t seed) {
  bool stirling_ok = true;
  for (int n = 2; n <= 7 && stirling_ok; ++n)
    for (int m = 2; m <= n && stirling_ok; ++m)
      stirling_ok = static_cast<long>(enumerate_partitions(n, m).size()) == stirling2(n, m);
  suite.check("partition-enumeration-counts", stirling_ok, "counts match S(N,M) for N <= 7");

  Rng rng(seed);
  bool closure_ok = true;
  for (int trial = 0; trial < 50 && closure_ok; ++trial) {
    const int n = 3 + static_cast<int>(rng.raw() % 5);
    const int m = 2 + static_cast<int>(rng.raw() % (n - 1));
    const auto parts = enumerate_partitions(n, m);
    const Partition& p = parts[rng.raw() % parts.size()];
    const auto realized = realized_subsets(p);
    const SubsetMask full = (SubsetMask{1} << n) - 1;
    for (SubsetMask a : realized)
      closure_ok = closure_ok &&
                   std::binary_search(realized.begin(), realized.end(), full & ~a);
    closure_ok = closure_ok && realized.size() == (size_t{1} << p.num_blocks()) - 2;
  }
  suite.check("realized-subsets-complement-closure", closure_ok,
              "realized sets closed under complement, size 2^M-2");

  const SlackReport theorem = verify_weights(4, four_party_theorem_scheme());
  suite.check("four-party-scheme-tight", theorem.valid && theorem.tight,
              "coverage slack identically zero on all 14 subsets");
  const SlackReport bi = verify_weights(4, four_party_bipartition_scheme());
  suite.check("bipartition-scheme-tight", bi.valid && bi.tight,
              "coverage slack identically zero on all 14 subsets");
}

void scheme_property_checks(Suite& suite, std::uint64_t seed) {
  Rng rng(seed);

  struct Case {
    SystemShape shape;
    WeightScheme scheme;
    bool tight;
  };
  std::vector<Case> cases;
  cases.push_back({SystemShape({2, 2, 2, 2}), four_party_theorem_scheme(), true});
  cases.push_back({SystemShape({2, 2, 2, 2}), four_party_bipartition_scheme(), true});
  {
    WeightScheme partial;  // valid but slack-positive scheme
    partial.n = 4;
    partial.add(parse_partition("12|34", 4), Rational(1) / 4);
    cases.push_back({SystemShape({2, 2, 2, 2}), partial, false});
  }
  {
    const auto family = enumerate_partitions(3, 2);
    const ComposeResult composed =
        compose_weights(3, family, ComposeObjective::max_total);
    cases.push_back({SystemShape({2, 2, 2}), composed.scheme, false});
  }

  double ineq_worst = std::numeric_limits<double>::infinity();
  double eq_worst = 0.0;
  for (const Case& c : cases) {
    const SlackReport report = verify_weights(c.shape.num_systems(), c.scheme);
    if (!report.valid) {
      suite.check("scheme-pure-inequality", false,
                  "internal scheme unexpectedly invalid");
      return;
    }
    for (int i = 0; i < 500; ++i) {
      const PureState psi = random_pure(c.shape, rng);
      const double lhs = concurrence_full(psi).squared;
      const double rhs = scheme_pure_squared(psi, c.scheme);
      ineq_worst = std::min(ineq_worst, lhs - rhs);
      if (c.tight) eq_worst = std::max(eq_worst, std::abs(lhs - rhs));
    }
  }
  suite.check("scheme-pure-inequality", ineq_worst > -1e-9, "min slack " + fmt(ineq_worst));
  suite.check("scheme-pure-equality-when-tight", eq_worst < 1e-9, "max dev " + fmt(eq_worst));
}

void concurrence_checks(Suite& suite, std::uint64_t seed) {
  const double id_dev = four_party_pure_identity_dev(500, seed);
  suite.check("four-party-pure-identity", id_dev < 1e-9, "max dev " + fmt(id_dev) + " (500 states)");

  const double lp_slack = level_pair_pure_slack(500, seed + 1);
  suite.check("level-pair-pure-inequality", lp_slack > -1e-9,
              "min slack " + fmt(lp_slack) + " (500 states)");

  const double amp_dev = amplitude_form_dev(500, seed + 2);
  suite.check("amplitude-form-equivalence", amp_dev < 1e-9,
              "max dev " + fmt(amp_dev) + " (500 states)");

  const double s3 = singleton_partition_dev(SystemShape({2, 2, 2}), 200, seed + 3);
  const double s4 = singleton_partition_dev(SystemShape({2, 2, 2, 2}), 200, seed + 4);
  suite.check("full-vs-singleton-partition", std::max(s3, s4) < 1e-9,
              "max dev " + fmt(std::max(s3, s4)));

  // Local unitary invariance of the full concurrence.
  Rng rng(seed + 5);
  const SystemShape shape({2, 2, 2, 2});
  double lu_dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const PureState psi = random_pure(shape, rng);
    Matrix u = Matrix::Identity(1, 1);
    for (int s = 0; s < 4; ++s) u = kron(u, random_unitary(2, rng));
    PureState rotated{shape, u * psi.amps, false};
    lu_dev = std::max(lu_dev,
                      std::abs(concurrence_full(rotated).value - concurrence_full(psi).value));
  }
  suite.check("local-unitary-invariance", lu_dev < 1e-9, "max dev " + fmt(lu_dev));
}

void bound_checks(Suite& suite, std::uint64_t seed) {
  const ProviderSet providers;

  const double hier = hierarchy_slack(200, seed, providers);
  suite.check("four-party-vs-bipartition-hierarchy", hier > -1e-12,
              "min slack " + fmt(hier) + " (200 states)");

  const double gap2 = two_qubit_soundness_gap(100, seed + 1);
  suite.check("two-qubit-bound-soundness", gap2 < 1e-9, "max overshoot " + fmt(gap2));

  const double gap4 = pure_soundness_gap(100, seed + 2);
  suite.check("pure-state-bound-soundness", gap4 < 1e-9, "max overshoot " + fmt(gap4));

  const double sep = separable_bound_ceiling(100, seed + 3);
  suite.check("separable-states-undetected", sep < 1e-9, "max bound " + fmt(sep));

  // Rank-1 substate consistency between the mixed and pure extraction paths.
  Rng rng(seed + 4);
  double sub_dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const PureState psi = random_pure(SystemShape({2, 2, 4}), rng);
    const DensityMatrix rho = density_from_pure(psi);
    for (auto [k1, k2] : substate_selectors()) {
      const DensityMatrix sub = substate_mixed(rho, k1, k2);
      const PureState sub_psi = substate_pure(psi, k1, k2);
      const Matrix outer = sub_psi.amps * sub_psi.amps.adjoint();
      sub_dev = std::max(sub_dev, (sub.mat - outer).cwiseAbs().maxCoeff());
    }
  }
  suite.check("substate-rank1-consistency", sub_dev < 1e-10, "max dev " + fmt(sub_dev));
}

void example_checks(Suite& suite) {
  bool finite = true;
  for (int i = 0; i <= 1000; ++i) {
    const double t = i / 1000.0;
    const ZValues z = z_formulas(t);
    finite = finite && std::isfinite(z.z1) && std::isfinite(z.z2) && std::isfinite(z.z3) &&
             std::isfinite(z.z4) && std::isfinite(z_piecewise(t));
  }
  suite.check("closed-forms-finite", finite, "z1..z4 and Z finite on [0,1]");

  const double jump_02 = z_piecewise(std::nextafter(0.2, 1.0)) - z_piecewise(0.2);
  const double jump_03 =
      z_piecewise(std::nextafter(0.308051, 1.0)) - z_piecewise(0.308051);
  suite.check("piecewise-branch-joins",
              std::abs(jump_02) < 1e-12 && std::abs(jump_03) < 1e-4,
              "measured jumps " + fmt(jump_02) + " at 0.2, " + fmt(jump_03) + " at 0.308051");

  const double endpoint = assemble_paper_bound(1.0);
  const PureState psi = example_pure_state();
  const double exact = concurrence_full(psi).squared;
  suite.check("endpoint-soundness", endpoint > 0.0 && endpoint <= exact + 1e-12,
              "assembled bound " + fmt(endpoint) + " vs exact " + fmt(exact));

  const ProviderSet providers;
  const ExamplePoint p1 = evaluate_example_point(1.0, providers);
  const double direct = four_party_bound(rho_example(1.0), TriMethod::best, providers).squared;
  suite.check("engine-column-consistency", std::abs(p1.bound_sq_engine - direct) < 1e-9,
              "sweep column matches direct bound at t=1");
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
  Suite suite;
  qstate_checks(suite, seed);
  partition_checks(suite, seed + 101);
  scheme_property_checks(suite, seed + 202);
  concurrence_checks(suite, seed + 303);
  bound_checks(suite, seed + 404);
  example_checks(suite);
  return suite.results;
}

std::string format_selftest_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  int failed = 0;
  for (const CheckResult& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
    if (!r.pass) ++failed;
  }
  os << (failed == 0 ? "all " + std::to_string(results.size()) + " suites passed"
                     : std::to_string(failed) + " of " + std::to_string(results.size()) +
                           " suites FAILED")
     << "\n";
  return os.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace qconc
