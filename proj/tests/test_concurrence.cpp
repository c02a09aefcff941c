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

#include "concurrence.hpp"
#include "linalg.hpp"
#include "random.hpp"
#include "selftest.hpp"

using namespace qconc;

namespace {

PureState double_bell() {
  Vector v = Vector::Zero(16);
  v(0) = v(3) = v(12) = v(15) = 0.5;
  return make_pure(SystemShape({2, 2, 2, 2}), v);
}

PureState ghz3() {
  Vector v = Vector::Zero(8);
  v(0) = v(7) = 1.0 / std::sqrt(2.0);
  return make_pure(SystemShape({2, 2, 2}), v);
}

}  // namespace

TEST_CASE("full product states have zero concurrence") {
  Rng rng(2);
  for (const SystemShape& shape : {SystemShape({2, 2, 2}), SystemShape({2, 2, 2, 2})}) {
    const PureState psi = random_product_pure(shape, rng);
    CHECK(concurrence_full(psi).value == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("two Bell pairs: C4 = sqrt(7)/2") {
  // Reduced purities: four singles at 1/2, pairs {1, 1/4 x4, 1}, four triples
  // at 1/2; the sum is 7 and C^2 = (1/4)(14-7) = 7/4.
  const ConcurrenceValue c = concurrence_full(double_bell());
  CHECK(c.squared == doctest::Approx(7.0 / 4.0).epsilon(1e-12));
  CHECK(c.value == doctest::Approx(std::sqrt(7.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("GHZ3: C3 = sqrt(3/2)") {
  const ConcurrenceValue c = concurrence_full(ghz3());
  CHECK(c.squared == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(c.value == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
}

TEST_CASE("partition concurrence on two Bell pairs") {
  const PureState psi = double_bell();
  CHECK(concurrence_partition(psi, parse_partition("12|34", 4)).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(concurrence_partition(psi, parse_partition("13|24", 4)).squared ==
        doctest::Approx(1.5).epsilon(1e-12));
  // Six purity terms 1/2, 0, 1/2, 1/2, 0, 1/2 halved-summed.
  CHECK(concurrence_partition(psi, parse_partition("1|2|34", 4)).squared ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partition concurrence rejects mismatched N and subnormalized states") {
  const PureState psi = ghz3();
  CHECK_THROWS_AS(concurrence_partition(psi, parse_partition("1|2|34", 4)), Error);
  PureState scaled = psi;
  scaled.amps *= 0.5;
  scaled.subnormalized = true;
  CHECK_THROWS_AS(concurrence_full(scaled), Error);
}

TEST_CASE("full concurrence equals the all-singletons partition") {
  CHECK(singleton_partition_dev(SystemShape({2, 2, 2}), 200, 31) < 1e-9);
  CHECK(singleton_partition_dev(SystemShape({2, 2, 2, 2}), 200, 32) < 1e-9);
}

TEST_CASE("amplitude form on frozen states") {
  SUBCASE("|000> vanishes") {
    Vector v = Vector::Zero(16);
    v(0) = 1.0;
    const PureState psi = make_pure(SystemShape({2, 2, 4}), v);
    CHECK(concurrence_224_coefficient(psi).value == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("embedded GHZ agrees with the partition formula") {
    Vector v = Vector::Zero(16);
    v(0) = v(15) = 1.0 / std::sqrt(2.0);  // (|000> + |113>)/sqrt(2)
    const PureState psi = make_pure(SystemShape({2, 2, 4}), v);
    const double amp = concurrence_224_coefficient(psi).squared;
    const double part = concurrence_partition(psi, parse_partition("1|2|3", 3)).squared;
    CHECK(amp == doctest::Approx(part).epsilon(1e-12));
    CHECK(amp == doctest::Approx(1.5).epsilon(1e-12));
  }

  SUBCASE("random states match the partition formula") {
    CHECK(amplitude_form_dev(500, 2024) < 1e-9);
  }

  SUBCASE("wrong shape is rejected") {
    CHECK_THROWS_AS(concurrence_224_coefficient(ghz3()), Error);
  }
}

TEST_CASE("pure substate extraction") {
  Rng rng(6);
  SUBCASE("support outside the selector gives the zero vector") {
    Vector v = Vector::Zero(16);
    v(0) = v(4) = v(8) = v(12) = 0.5;  // support on k in {0}
    const PureState psi = make_pure(SystemShape({2, 2, 4}), v);
    const PureState sub = substate_pure(psi, 2, 3);
    CHECK(sub.amps.norm() == doctest::Approx(0.0));
    CHECK(sub.subnormalized);
  }

  SUBCASE("selector covering the support reindexes the state") {
    Vector v = Vector::Zero(16);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) v(i * 8 + j * 4 + k) = rng.complex_gaussian();
    v /= v.norm();
    const PureState psi = make_pure(SystemShape({2, 2, 4}), v);
    const PureState sub = substate_pure(psi, 0, 1);
    CHECK(std::abs(sub.amps.norm() - 1.0) < 1e-12);
    CHECK(!sub.subnormalized);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          CHECK(std::abs(sub.amps(i * 4 + j * 2 + k) - psi.amps(i * 8 + j * 4 + k)) == 0.0);
  }

  SUBCASE("uniform amplitudes: squared norm 1/2 on any selector") {
    Vector v = Vector::Constant(16, cxd(0.25, 0.0));
    const PureState psi = make_pure(SystemShape({2, 2, 4}), v);
    for (auto [k1, k2] : substate_selectors()) {
      const PureState sub = substate_pure(psi, k1, k2);
      CHECK(sub.amps.squaredNorm() == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(sub.subnormalized);
    }
  }

  SUBCASE("invalid selectors are rejected") {
    const PureState psi = random_pure(SystemShape({2, 2, 4}), rng);
    CHECK_THROWS_AS(substate_pure(psi, 1, 1), Error);
    CHECK_THROWS_AS(substate_pure(psi, 2, 1), Error);
    CHECK_THROWS_AS(substate_pure(psi, 0, 4), Error);
    CHECK_THROWS_AS(substate_pure(ghz3(), 0, 1), Error);
  }
}

TEST_CASE("level-pair inequality on pure states") {
  CHECK(level_pair_pure_slack(500, 99) > -1e-9);
}

TEST_CASE("four-party pure identity") {
  CHECK(four_party_pure_identity_dev(500, 123) < 1e-9);
}

TEST_CASE("local unitary invariance") {
  Rng rng(55);
  const SystemShape shape({2, 2, 2, 2});
  for (int i = 0; i < 25; ++i) {
    const PureState psi = random_pure(shape, rng);
    Matrix u = Matrix::Identity(1, 1);
    for (int s = 0; s < 4; ++s) u = kron(u, random_unitary(2, rng));
    const PureState rotated{shape, u * psi.amps, false};
    CHECK(std::abs(concurrence_full(rotated).value - concurrence_full(psi).value) < 1e-9);
  }
}

TEST_CASE("concurrence value caps") {
  Rng rng(66);
  for (int i = 0; i < 50; ++i) {
    const PureState psi = random_pure(SystemShape({2, 2, 2, 2}), rng);
    const ConcurrenceValue c = concurrence_full(psi);
    CHECK(c.squared == doctest::Approx(c.value * c.value).epsilon(1e-12));
    const double cap = std::pow(2.0, 1.0 - 2.0) * std::sqrt(14.0);
    CHECK(c.value <= cap + 1e-12);
  }
}
