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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "bounds.hpp"
#include "concurrence.hpp"
#include "example_family.hpp"
#include "linalg.hpp"
#include "random.hpp"
#include "selftest.hpp"
#include "state_io.hpp"

using namespace qconc;

namespace {

PureState bell_pair() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return make_pure(SystemShape({2, 2}), v);
}

PureState double_bell() {
  Vector v = Vector::Zero(16);
  v(0) = v(3) = v(12) = v(15) = 0.5;
  return make_pure(SystemShape({2, 2, 2, 2}), v);
}

PureState ghz4() {
  Vector v = Vector::Zero(16);
  v(0) = v(15) = 1.0 / std::sqrt(2.0);
  return make_pure(SystemShape({2, 2, 2, 2}), v);
}

DensityMatrix werner(double p) {
  const PureState bell = bell_pair();
  Matrix m = Matrix::Identity(4, 4) * ((1.0 - p) / 4.0) + p * (bell.amps * bell.amps.adjoint());
  return density_unchecked(SystemShape({2, 2}), std::move(m), false);
}

const Partition kSplit12 = parse_partition("1|2", 2);

}  // namespace

TEST_CASE("wootters concurrence") {
  CHECK(wootters_concurrence(density_from_pure(bell_pair())) ==
        doctest::Approx(1.0).epsilon(1e-10));

  Rng rng(12);
  const PureState prod = random_product_pure(SystemShape({2, 2}), rng);
  CHECK(wootters_concurrence(density_from_pure(prod)) == doctest::Approx(0.0).epsilon(1e-9));

  // Werner family: C = max(0, (3p-1)/2) analytically.
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.9, 1.0}) {
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    CHECK(wootters_concurrence(werner(p)) == doctest::Approx(expected).epsilon(1e-9));
  }
  CHECK(wootters_concurrence(werner(2.0 / 3.0)) == doctest::Approx(0.5).epsilon(1e-10));

  CHECK_THROWS_AS(wootters_concurrence(density_from_pure(double_bell())), Error);
}

TEST_CASE("bipartite lower bound") {
  SUBCASE("Bell state, ppt: trace norm 2 gives bound 1") {
    const BoundReport r =
        bipartite_lower_bound(density_from_pure(bell_pair()), kSplit12, BipartiteMethod::ppt);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("maximally mixed two qubits: 0 for every method") {
    const DensityMatrix iso =
        density_unchecked(SystemShape({2, 2}), Matrix::Identity(4, 4) * 0.25, false);
    for (BipartiteMethod m : {BipartiteMethod::ppt, BipartiteMethod::ccnr,
                              BipartiteMethod::wootters_exact, BipartiteMethod::best})
      CHECK(bipartite_lower_bound(iso, kSplit12, m).value == doctest::Approx(0.0));
  }
  SUBCASE("ppt+ccnr-passing state clamps to zero without wootters") {
    Rng rng(21);
    const DensityMatrix prod = random_product_mixture(SystemShape({2, 2}), 3, rng);
    ProviderSet no_wootters{true, true, false};
    CHECK(bipartite_lower_bound(prod, kSplit12, no_wootters).value ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("wootters on a non-2x2 split is a method/shape mismatch") {
    const DensityMatrix rho = density_from_pure(double_bell());
    CHECK_THROWS_AS(
        bipartite_lower_bound(rho, parse_partition("1|234", 4), BipartiteMethod::wootters_exact),
        Error);
  }
}

TEST_CASE("tripartition relation bound") {
  const ProviderSet ppt_only{true, false, false};

  SUBCASE("product four-qubit state: 0") {
    Rng rng(33);
    const PureState prod = random_product_pure(SystemShape({2, 2, 2, 2}), rng);
    const BoundReport r = tripartition_bound_relation(density_from_pure(prod),
                                                      parse_partition("1|2|34", 4), ppt_only);
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-9));
  }

  SUBCASE("two Bell pairs under 1|2|34: the two single-qubit cuts give 1 each") {
    const BoundReport r = tripartition_bound_relation(density_from_pure(double_bell()),
                                                      parse_partition("1|2|34", 4), ppt_only);
    CHECK(r.squared == doctest::Approx(1.0).epsilon(1e-9));
    // Equal to the exact pure value across this tripartition.
    CHECK(concurrence_partition(double_bell(), parse_partition("1|2|34", 4)).squared ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("GHZ4 under 1|2|34, ppt: 13/12 by the trace-norm oracle") {
    // Cuts 1|234 and 2|134 each reach trace norm 2 (bound 1); the 12|34 cut
    // has Schmidt weights {1/2,1/2} in 4x4, so the bound is sqrt(1/6).
    const BoundReport r = tripartition_bound_relation(density_from_pure(ghz4()),
                                                      parse_partition("1|2|34", 4), ppt_only);
    CHECK(r.squared > 0.0);
    CHECK(r.squared == doctest::Approx(13.0 / 12.0).epsilon(1e-9));
  }

  SUBCASE("wrong block profile is rejected") {
    const DensityMatrix rho = density_from_pure(ghz4());
    CHECK_THROWS_AS(tripartition_bound_relation(rho, parse_partition("1|234", 4), ppt_only),
                    Error);
    CHECK_THROWS_AS(tripartition_bound_relation(rho, parse_partition("1|2|3|4", 4), ppt_only),
                    Error);
  }
}

TEST_CASE("four-party bound") {
  const ProviderSet best;

  SUBCASE("maximally mixed: 0") {
    const DensityMatrix iso = density_unchecked(
        SystemShape({2, 2, 2, 2}), Matrix::Identity(16, 16) / 16.0, false);
    for (TriMethod tm : {TriMethod::relation, TriMethod::theorem2, TriMethod::best})
      CHECK(four_party_bound(iso, tm, best).value == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("pure two Bell pairs with exact sub-values reproduce C4^2 = 7/4") {
    // (1/12)(2*(1+1.75+1.75+1+1.75+1.75) + (0+1.5+1.5)) = 7/4.
    const PureState psi = double_bell();
    const WeightScheme scheme = four_party_theorem_scheme();
    const double assembled = scheme_pure_squared(psi, scheme);
    CHECK(assembled == doctest::Approx(7.0 / 4.0).epsilon(1e-12));
    CHECK(concurrence_full(psi).squared == doctest::Approx(7.0 / 4.0).epsilon(1e-12));
  }

  SUBCASE("family state at t=1/2 is detected") {
    const BoundReport r = four_party_bound(rho_example(0.5), TriMethod::best, best);
    CHECK(r.squared > 0.0);
    CHECK(r.value > 0.0);
  }

  SUBCASE("non-four-partite input is rejected") {
    const DensityMatrix rho = density_from_pure(bell_pair());
    CHECK_THROWS_AS(four_party_bound(rho, TriMethod::best, best), Error);
  }
}

TEST_CASE("mixed substate extraction") {
  SUBCASE("maximally mixed: I8/16 with trace 1/2") {
    const DensityMatrix iso = density_unchecked(
        SystemShape({2, 2, 4}), Matrix::Identity(16, 16) / 16.0, false);
    for (auto [k1, k2] : substate_selectors()) {
      const DensityMatrix sub = substate_mixed(iso, k1, k2);
      CHECK((sub.mat - Matrix::Identity(8, 8) / 16.0).cwiseAbs().maxCoeff() < 1e-15);
      CHECK(sub.mat.trace().real() == doctest::Approx(0.5));
      CHECK(sub.subnormalized);
    }
  }

  SUBCASE("rank-1 substates equal outer products of pure substates") {
    Rng rng(77);
    for (int i = 0; i < 20; ++i) {
      const PureState psi = random_pure(SystemShape({2, 2, 4}), rng);
      const DensityMatrix rho = density_from_pure(psi);
      for (auto [k1, k2] : substate_selectors()) {
        const DensityMatrix sub = substate_mixed(rho, k1, k2);
        const PureState sub_psi = substate_pure(psi, k1, k2);
        const Matrix outer = sub_psi.amps * sub_psi.amps.adjoint();
        CHECK((sub.mat - outer).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }

  SUBCASE("selector traces add to three times the total trace") {
    Rng rng(78);
    const DensityMatrix rho = random_mixed(SystemShape({2, 2, 4}), 3, rng);
    double total = 0.0;
    for (auto [k1, k2] : substate_selectors())
      total += substate_mixed(rho, k1, k2).mat.trace().real();
    CHECK(total == doctest::Approx(3.0 * rho.mat.trace().real()).epsilon(1e-12));
  }

  SUBCASE("invalid selectors") {
    const DensityMatrix iso = density_unchecked(
        SystemShape({2, 2, 4}), Matrix::Identity(16, 16) / 16.0, false);
    CHECK_THROWS_AS(substate_mixed(iso, 1, 1), Error);
    CHECK_THROWS_AS(substate_mixed(iso, -1, 2), Error);
    const DensityMatrix wrong = density_unchecked(
        SystemShape({2, 2, 2, 2}), Matrix::Identity(16, 16) / 16.0, false);
    CHECK_THROWS_AS(substate_mixed(wrong, 0, 1), Error);
  }
}

TEST_CASE("level-pair bound on 2x2x4 states") {
  const ProviderSet best;

  SUBCASE("separable product state: 0") {
    Rng rng(41);
    const DensityMatrix sep = random_product_mixture(SystemShape({2, 2, 4}), 4, rng);
    CHECK(level_pair_bound(sep, best).value == doctest::Approx(0.0).epsilon(1e-9));
  }

  SUBCASE("embedded GHZ3: only the {0,1} selector contributes") {
    Vector v = Vector::Zero(16);
    v(0) = v(13) = 1.0 / std::sqrt(2.0);  // (|000> + |111>)/sqrt(2) on k in {0,1}
    const PureState psi = make_pure(SystemShape({2, 2, 4}), v);
    const BoundReport r = level_pair_bound(density_from_pure(psi), best);
    CHECK(r.squared > 0.0);
    CHECK(r.squared <= 1.5 + 1e-9);
    // GHZ3 cuts all reach bound 1, so the single live selector gives
    // (1/3) * (1/2) * 3 = 1/2.
    CHECK(r.squared == doctest::Approx(0.5).epsilon(1e-9));
    for (const auto& [key, term] : r.contributions) {
      if (key == "01")
        CHECK(term == doctest::Approx(1.5).epsilon(1e-9));
      else
        CHECK(term == doctest::Approx(0.0).epsilon(1e-12));
    }
  }

  SUBCASE("maximally mixed: 0") {
    const DensityMatrix iso = density_unchecked(
        SystemShape({2, 2, 4}), Matrix::Identity(16, 16) / 16.0, false);
    CHECK(level_pair_bound(iso, best).value == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("four-qubit substate bound") {
  const ProviderSet best;

  SUBCASE("maximally mixed: 0") {
    const DensityMatrix iso = density_unchecked(
        SystemShape({2, 2, 2, 2}), Matrix::Identity(16, 16) / 16.0, false);
    CHECK(four_qubit_substate_bound(iso, best).value == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("pure two Bell pairs: positive, sound, and frozen from the pipeline") {
    const DensityMatrix rho = density_from_pure(double_bell());
    const BoundReport r = four_qubit_substate_bound(rho, best);
    CHECK(r.squared > 0.0);
    CHECK(r.squared <= 7.0 / 4.0 + 1e-9);
    // Tripartitions aligned with the Bell pairing have substate sum 2; the
    // four crossed ones have 7/4 (two GHZ-type selectors at 3/8, four Bell
    // ones at 1/4). With 2|2 cuts {0, 3/2, 3/2}:
    // (1/12)(2*(2/3)*2 + 4*(2/3)*(7/4) + 3) = 31/36.
    CHECK(r.squared == doctest::Approx(31.0 / 36.0).epsilon(1e-9));
  }

  SUBCASE("family state at t=0.15 is detected (threshold 1/9)") {
    const BoundReport r = four_qubit_substate_bound(rho_example(0.15), best);
    CHECK(r.value > 0.0);
  }

  SUBCASE("family state at t=0.05 is below threshold") {
    const BoundReport r = four_qubit_substate_bound(rho_example(0.05), best);
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("equals the four-party bound with substate tripartite terms") {
    Rng rng(123);
    for (int i = 0; i < 5; ++i) {
      const DensityMatrix rho = random_mixed(SystemShape({2, 2, 2, 2}), 3, rng);
      const double a = four_qubit_substate_bound(rho, best).squared;
      const double b = four_party_bound(rho, TriMethod::theorem2, best).squared;
      CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
  }
}

TEST_CASE("bipartition-sum bound") {
  const ProviderSet ppt_only{true, false, false};

  SUBCASE("maximally mixed: 0") {
    const DensityMatrix iso = density_unchecked(
        SystemShape({2, 2, 2, 2}), Matrix::Identity(16, 16) / 16.0, false);
    CHECK(bipartition_sum_bound(iso, ppt_only).value == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("two Bell pairs with exact pure values: 7/4") {
    // Single-qubit cuts contribute 1 each, 12|34 contributes 0, and the two
    // crossed 2|2 cuts contribute 3/2 each: (1/4)(4+0+3) = 7/4. The scheme is
    // tight, so the exact pure evaluation meets C4^2.
    const PureState psi = double_bell();
    const double exact_sum = scheme_pure_squared(psi, four_party_bipartition_scheme());
    CHECK(exact_sum == doctest::Approx(7.0 / 4.0).epsilon(1e-12));
    // The PPT estimates are tight on every cut of this state.
    const BoundReport r = bipartition_sum_bound(density_from_pure(psi), ppt_only);
    CHECK(r.squared == doctest::Approx(7.0 / 4.0).epsilon(1e-9));
  }

  SUBCASE("separable mixture of 50 product states: 0") {
    Rng rng(99);
    const DensityMatrix sep = random_product_mixture(SystemShape({2, 2, 2, 2}), 50, rng);
    CHECK(bipartition_sum_bound(sep, ProviderSet{}).value ==
          doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("scheme bound") {
  const ProviderSet ppt_only{true, false, false};
  const DensityMatrix rho = density_from_pure(double_bell());

  SUBCASE("theorem scheme matches the four-party bound with relation terms") {
    const BoundReport via_scheme = scheme_bound(rho, four_party_theorem_scheme(), ppt_only);
    const BoundReport direct = four_party_bound(rho, TriMethod::relation, ppt_only);
    CHECK(via_scheme.squared == doctest::Approx(direct.squared).epsilon(1e-12));
    REQUIRE(via_scheme.contributions.size() == direct.contributions.size());
    const std::map<std::string, double> a(via_scheme.contributions.begin(),
                                          via_scheme.contributions.end());
    const std::map<std::string, double> b(direct.contributions.begin(),
                                          direct.contributions.end());
    REQUIRE(a.size() == b.size());
    for (const auto& [key, term] : a) {
      REQUIRE(b.count(key) == 1);
      CHECK(term == doctest::Approx(b.at(key)).epsilon(1e-12));
    }
  }

  SUBCASE("cut-product state scores zero on its own cut") {
    WeightScheme s;
    s.n = 4;
    s.add(parse_partition("12|34", 4), Rational(1) / 4);
    CHECK(scheme_bound(rho, s, ppt_only).value == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("crossed cut at weight 1/4: (1/4) * 3/2") {
    WeightScheme s;
    s.n = 4;
    s.add(parse_partition("13|24", 4), Rational(1) / 4);
    const BoundReport r = scheme_bound(rho, s, ppt_only);
    // Schmidt weights across 13|24 are uniform on 4 terms; the trace norm of
    // the partial transpose is 4 and the bound sqrt(2/12)*3, squared 3/2.
    CHECK(r.squared == doctest::Approx(0.375).epsilon(1e-9));
  }

  SUBCASE("invalid schemes are refused with the offending subset") {
    WeightScheme s;
    s.n = 4;
    s.add(parse_partition("1|2|34", 4), 1);
    try {
      scheme_bound(rho, s, ppt_only);
      FAIL("expected refusal");
    } catch (const Error& e) {
      const std::string msg = e.what();
      CHECK(msg.find("slack") != std::string::npos);
      CHECK(msg.find("-1/4") != std::string::npos);
    }
  }
}

TEST_CASE("hierarchy: four-party bound dominates the bipartition sum") {
  CHECK(hierarchy_slack(200, 7, ProviderSet{}) > -1e-12);
}

TEST_CASE("soundness against exact values") {
  CHECK(two_qubit_soundness_gap(100, 8) < 1e-9);
  CHECK(pure_soundness_gap(100, 9) < 1e-9);
}

TEST_CASE("separable mixtures are never flagged") {
  CHECK(separable_bound_ceiling(100, 10) < 1e-9);
}
