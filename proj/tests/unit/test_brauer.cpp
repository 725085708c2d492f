// Copyright 2026 The crossloop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "crossloop/brauer.hpp"
#include "crossloop/cli.hpp"
#include "doctest.h"
#include "shared.hpp"

using namespace crossloop;
using crossloop::testing::pat;

namespace {

RationalVector random_vector(int n, std::mt19937_64& rng) {
  RationalVector v(n);
  for (const auto& pi : enumerate_patterns(n)) {
    v.set(pi, ratio(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1));
  }
  return v;
}

}  // namespace

TEST_CASE("X normalization and the e limit") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 3; ++n) {
    const RationalVector v = random_vector(n, rng);
    for (int i = 0; i < 2 * n; ++i) {
      CHECK(apply(OperatorSpec::x(i, 0), v) == v);
      for (const auto& pi : enumerate_patterns(n)) {
        CHECK(apply(OperatorSpec::x(i, 1), RationalVector::basis(pi)) ==
              RationalVector::basis(apply_e(pi, i)));
      }
    }
  }
}

TEST_CASE("Rcheck unitarity on random vectors") {
  std::mt19937_64 rng(9);
  const auto values = random_rationals(40, 17);
  for (std::size_t k = 0; k + 1 < values.size(); k += 2) {
    const Rational d = values[k + 1] - values[k];
    if (d == 0 || d == 1 || d == -1 || d == 2 || d == -2) continue;
    for (int n = 1; n <= 3; ++n) {
      const RationalVector v = random_vector(n, rng);
      const int i = static_cast<int>(rng() % (2 * n));
      const std::vector<OperatorSpec> ops{OperatorSpec::rcheck(i, values[k + 1], values[k]),
                                          OperatorSpec::rcheck(i, values[k], values[k + 1])};
      CHECK(apply_product<Rational>(ops, v) == v);
    }
  }
}

TEST_CASE("Yang-Baxter and unitarity") {
  CHECK(check_yang_baxter(2, ratio(1, 3), ratio(1, 5)).pass);
  CHECK(check_yang_baxter(3, 0, 0).pass);
  const Rational u = ratio(1, 7);
  const Rational scalar = (1 - u * u) * (1 - u * u / 4);
  CHECK(scalar == (1 - ratio(1, 49)) * (1 - ratio(1, 196)));
  for (const auto& pi : enumerate_patterns(2)) {
    const std::vector<OperatorSpec> ops{OperatorSpec::x(1, u), OperatorSpec::x(1, -u)};
    CHECK(apply_product<Rational>(ops, RationalVector::basis(pi)) ==
          RationalVector::basis(pi) * scalar);
  }
}

TEST_CASE("Brauer relations") {
  for (int n = 1; n <= 3; ++n) CHECK(check_brauer_relations(n).pass);
}

TEST_CASE("transfer matrix") {
  const std::vector<Rational> z1{ratio(1, 3), ratio(2, 7)};
  const auto b = RationalVector::basis(pat("(1 2)"));
  CHECK(tprime_apply(1, z1, b) == b);

  const std::vector<Rational> z{0, ratio(1, 3), ratio(1, 5), ratio(1, 7)};
  const RationalVector psi = evaluate_state(testing::state(2), z);
  CHECK(tprime_apply(2, z, psi) == psi);
}

TEST_CASE("v_n invariance") {
  std::mt19937_64 rng(21);
  const auto values = random_rationals(30, 23);
  for (std::size_t k = 0; k + 1 < values.size(); k += 2) {
    const Rational d = values[k + 1] - values[k];
    if (d == 2 || d == -1) continue;
    const int n = 1 + static_cast<int>(rng() % 3);
    CHECK(check_vn_invariance(n, static_cast<int>(rng() % (2 * n)), values[k], values[k + 1]).pass);
  }
}

TEST_CASE("b_n relation against the explicit action") {
  const Rational z = ratio(1, 2), w = ratio(1, 5);
  const Rational x = w - z;
  const Rational lambda = (1 + x / 2) * (1 - x) / ((1 - x / 2) * (1 + x));
  for (const auto& pi : enumerate_patterns(2)) {
    const auto image = apply(OperatorSpec::rcheck(0, z, w), RationalVector::basis(pi));
    Rational in_sector = 0;
    for (const auto& [sigma, c] : image.entries()) {
      if (is_permutation_pattern(sigma)) in_sector += c;
    }
    CHECK(in_sector == (is_permutation_pattern(pi) ? lambda : Rational(0)));
  }
  CHECK(check_bn_relation(2, 0, z, w).pass);
  CHECK(check_bn_relation(3, 1, z, z).pass);
  CHECK_THROWS_AS(check_bn_relation(2, 1, z, w), std::invalid_argument);
}
