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

#include <algorithm>

#include "concurrence.hpp"
#include "random.hpp"
#include "selftest.hpp"
#include "weights.hpp"

using namespace qconc;

namespace {

Rational slack_of(const SlackReport& report, const std::string& subset) {
  for (const auto& [mask, slack] : report.slacks)
    if (mask_to_string(mask) == subset) return slack;
  FAIL("subset not found: ", subset);
  return 0;
}

}  // namespace

TEST_CASE("enumerate_partitions(4,3) lists the six tripartitions in canonical order") {
  const auto parts = enumerate_partitions(4, 3);
  std::vector<std::string> names;
  for (const Partition& p : parts) names.push_back(p.to_string());
  CHECK(names == std::vector<std::string>{"1|2|34", "1|23|4", "1|24|3", "12|3|4", "13|2|4",
                                          "14|2|3"});
}

TEST_CASE("enumerate_partitions(4,2) has four 1|3 and three 2|2 partitions") {
  const auto parts = enumerate_partitions(4, 2);
  CHECK(parts.size() == 7);
  int singles = 0, pairs = 0;
  for (const Partition& p : parts) {
    const auto prof = p.size_profile();
    if (prof == std::vector<int>{3, 1}) ++singles;
    if (prof == std::vector<int>{2, 2}) ++pairs;
  }
  CHECK(singles == 4);
  CHECK(pairs == 3);
}

TEST_CASE("enumerate_partitions(3,3) is the single finest partition") {
  const auto parts = enumerate_partitions(3, 3);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].to_string() == "1|2|3");
}

TEST_CASE("enumeration counts match Stirling numbers up to N=7") {
  for (int n = 2; n <= 7; ++n)
    for (int m = 2; m <= n; ++m)
      CHECK(static_cast<long>(enumerate_partitions(n, m).size()) == stirling2(n, m));
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(4, 3) == 6);
  CHECK(stirling2(7, 3) == 301);
}

TEST_CASE("enumerate_partitions rejects M out of range") {
  CHECK_THROWS_AS(enumerate_partitions(4, 1), Error);
  CHECK_THROWS_AS(enumerate_partitions(4, 5), Error);
}

TEST_CASE("partition parsing and canonical form") {
  CHECK(parse_partition("2|34|1", 4).to_string() == "1|2|34");
  CHECK(parse_partition("42|3|1", 4).to_string() == "1|24|3");
  CHECK_THROWS_AS(parse_partition("1|2", 4), Error);     // incomplete
  CHECK_THROWS_AS(parse_partition("12|23", 3), Error);   // overlap
  CHECK_THROWS_AS(parse_partition("1||2", 2), Error);   // empty block
  CHECK_THROWS_AS(parse_partition("1|25", 4), Error);    // out of range
  CHECK_THROWS_AS(parse_partition("1|2|3x", 3), Error);  // bad character
}

TEST_CASE("realized subsets") {
  SUBCASE("1|2|34") {
    const auto got = realized_subsets(parse_partition("1|2|34", 4));
    std::vector<std::string> names;
    for (SubsetMask m : got) names.push_back(mask_to_string(m));
    std::sort(names.begin(), names.end());
    std::vector<std::string> want{"1", "2", "34", "12", "134", "234"};
    std::sort(want.begin(), want.end());
    CHECK(names == want);
  }
  SUBCASE("12|34") {
    const auto got = realized_subsets(parse_partition("12|34", 4));
    REQUIRE(got.size() == 2);
    CHECK(mask_to_string(got[0]) == "12");
    CHECK(mask_to_string(got[1]) == "34");
  }
  SUBCASE("finest partition realizes every nonempty proper subset") {
    CHECK(realized_subsets(parse_partition("1|2|3|4", 4)).size() == 14);
  }
  SUBCASE("closed under complement") {
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 3 + static_cast<int>(rng.raw() % 5);
      const int m = 2 + static_cast<int>(rng.raw() % (n - 1));
      const auto parts = enumerate_partitions(n, m);
      const Partition& p = parts[rng.raw() % parts.size()];
      const auto realized = realized_subsets(p);
      const SubsetMask full = (SubsetMask{1} << n) - 1;
      for (SubsetMask a : realized)
        CHECK(std::binary_search(realized.begin(), realized.end(), full & ~a));
    }
  }
}

TEST_CASE("coverage slack of the four-party theorem scheme is identically zero") {
  const SlackReport report = verify_weights(4, four_party_theorem_scheme());
  CHECK(report.valid);
  CHECK(report.tight);
  REQUIRE(report.slacks.size() == 14);
  for (const auto& [mask, slack] : report.slacks) CHECK(slack == 0);

  // Spot-check the counting: {1} is covered by three tripartitions at
  // (1/6) * 2^-1 each, exactly the 2^(2-4) target.
  CHECK(slack_of(report, "1") == 0);
  CHECK(slack_of(report, "12") == 0);
}

TEST_CASE("single 2|2 block partition at weight 1/4") {
  WeightScheme scheme;
  scheme.n = 4;
  scheme.add(parse_partition("12|34", 4), Rational(1) / 4);
  const SlackReport report = verify_weights(4, scheme);
  CHECK(report.valid);
  CHECK(!report.tight);
  CHECK(slack_of(report, "12") == 0);
  CHECK(slack_of(report, "34") == 0);
  CHECK(slack_of(report, "1") == Rational(1) / 4);
  CHECK(slack_of(report, "134") == Rational(1) / 4);
}

TEST_CASE("overweighted tripartition is invalid") {
  WeightScheme scheme;
  scheme.n = 4;
  scheme.add(parse_partition("1|2|34", 4), 1);
  const SlackReport report = verify_weights(4, scheme);
  CHECK(!report.valid);
  CHECK(slack_of(report, "1") == Rational(-1) / 4);
}

TEST_CASE("verify_weights rejects mismatched N") {
  WeightScheme scheme;
  scheme.n = 3;
  scheme.add(parse_partition("1|23", 3), Rational(1) / 2);
  CHECK_THROWS_AS(verify_weights(4, scheme), Error);
}

TEST_CASE("compose_weights recovers the four-party theorem coefficients") {
  std::vector<Partition> family = enumerate_partitions(4, 3);
  for (const Partition& p : enumerate_partitions(4, 2))
    if (p.size_profile() == std::vector<int>{2, 2}) family.push_back(p);

  const ComposeResult uniform = compose_weights(4, family, ComposeObjective::max_uniform);
  for (const auto& [p, w] : uniform.scheme.entries) {
    if (p.num_blocks() == 3) CHECK(w == Rational(1) / 6);
    if (p.num_blocks() == 2) CHECK(w == Rational(1) / 12);
  }
  const SlackReport report = verify_weights(4, uniform.scheme);
  CHECK(report.valid);
  CHECK(report.tight);

  const ComposeResult total = compose_weights(4, family, ComposeObjective::max_total);
  CHECK(total.total_weight == Rational(5) / 4);
  CHECK(verify_weights(4, total.scheme).valid);
  CHECK(total.profile_uniform);  // the uniform optimum attains the LP value
}

TEST_CASE("compose_weights on the finest three-party partition gives weight 1") {
  // The verifier is the oracle here: every subset is realized once with
  // coefficient w * 2^(2-3), and the target is 2^(2-3), so w <= 1 binds.
  const std::vector<Partition> family{parse_partition("1|2|3", 3)};
  for (ComposeObjective obj : {ComposeObjective::max_uniform, ComposeObjective::max_total}) {
    const ComposeResult r = compose_weights(3, family, obj);
    REQUIRE(r.scheme.entries.size() == 1);
    CHECK(r.scheme.entries[0].second == 1);
    const SlackReport report = verify_weights(3, r.scheme);
    CHECK(report.valid);
    CHECK(report.tight);
  }
}

TEST_CASE("compose_weights on a single bipartition gives weight 1/4") {
  const std::vector<Partition> family{parse_partition("12|34", 4)};
  for (ComposeObjective obj : {ComposeObjective::max_uniform, ComposeObjective::max_total}) {
    const ComposeResult r = compose_weights(4, family, obj);
    REQUIRE(r.scheme.entries.size() == 1);
    CHECK(r.scheme.entries[0].second == Rational(1) / 4);
    CHECK(verify_weights(4, r.scheme).valid);
  }
}

TEST_CASE("valid schemes lower-bound pure concurrence; tight schemes equal it") {
  Rng rng(4242);
  struct Case {
    SystemShape shape;
    WeightScheme scheme;
    bool tight;
  };
  std::vector<Case> cases;
  cases.push_back({SystemShape({2, 2, 2, 2}), four_party_theorem_scheme(), true});
  cases.push_back({SystemShape({2, 2, 2, 2}), four_party_bipartition_scheme(), true});
  {
    WeightScheme s;
    s.n = 3;
    s.add(parse_partition("1|23", 3), Rational(1) / 2);
    s.add(parse_partition("12|3", 3), Rational(1) / 2);
    s.add(parse_partition("13|2", 3), Rational(1) / 2);
    REQUIRE(verify_weights(3, s).tight);
    cases.push_back({SystemShape({2, 2, 2}), s, true});
  }
  {
    WeightScheme s;
    s.n = 4;
    s.add(parse_partition("12|34", 4), Rational(1) / 4);
    cases.push_back({SystemShape({2, 2, 2, 2}), s, false});
  }

  for (const Case& c : cases) {
    REQUIRE(verify_weights(c.shape.num_systems(), c.scheme).valid);
    for (int i = 0; i < 500; ++i) {
      const PureState psi = random_pure(c.shape, rng);
      const double lhs = concurrence_full(psi).squared;
      const double rhs = scheme_pure_squared(psi, c.scheme);
      CHECK(lhs - rhs > -1e-9);
      if (c.tight) CHECK(std::abs(lhs - rhs) < 1e-9);
    }
  }
}

TEST_CASE("scheme JSON round trip") {
  const WeightScheme scheme = four_party_theorem_scheme();
  const WeightScheme back = scheme_from_json(scheme_to_json(scheme));
  REQUIRE(back.entries.size() == scheme.entries.size());
  for (size_t i = 0; i < back.entries.size(); ++i) {
    CHECK(back.entries[i].first == scheme.entries[i].first);
    CHECK(back.entries[i].second == scheme.entries[i].second);
  }

  const WeightScheme parsed = scheme_from_json(
      R"({"n":3,"weights":{"1|23":"1/2","12|3":[1,2],"13|2":0.5}})");
  for (const auto& [p, w] : parsed.entries) CHECK(w == Rational(1) / 2);

  CHECK_THROWS_AS(scheme_from_json("{}"), Error);
  CHECK_THROWS_AS(scheme_from_json(R"({"n":3,"weights":{"1|2":[1,2]}})"), Error);
  CHECK_THROWS_AS(scheme_from_json(R"({"n":3,"weights":{"1|2|3":[-1,2]}})"), Error);
}
