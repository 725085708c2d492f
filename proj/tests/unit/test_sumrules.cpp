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

#include "crossloop/sumrules.hpp"
#include "doctest.h"
#include "shared.hpp"

using namespace crossloop;
using crossloop::testing::pat;
using crossloop::testing::state;
using crossloop::testing::zpoly;

namespace {

SkewMatrix random_skew(int dim, std::mt19937_64& rng) {
  SkewMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      // Sparse entries force pivot swaps.
      const long num = rng() % 3 == 0 ? 0 : static_cast<long>(rng() % 19) - 9;
      m.set(i, j, ratio(num, static_cast<long>(rng() % 4) + 1));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("small Pfaffians") {
  SkewMatrix two(2);
  two.set(0, 1, ratio(5, 3));
  CHECK(pfaffian(two) == ratio(5, 3));
  SkewMatrix four(4);
  const long a12 = 2, a13 = 3, a14 = 5, a23 = 7, a24 = 11, a34 = 13;
  four.set(0, 1, a12);
  four.set(0, 2, a13);
  four.set(0, 3, a14);
  four.set(1, 2, a23);
  four.set(1, 3, a24);
  four.set(2, 3, a34);
  CHECK(pfaffian(four) == a12 * a34 - a13 * a24 + a14 * a23);
  CHECK(pfaffian(SkewMatrix(3)) == 0);
  CHECK(pfaffian(SkewMatrix(0)) == 1);
}

TEST_CASE("Pf squared equals det") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 2 * (1 + trial % 4);
    const SkewMatrix m = random_skew(dim, rng);
    const Rational pf = pfaffian(m);
    CHECK(pf * pf == determinant(m.dense()));
  }
}

TEST_CASE("permutation-sector sum") {
  const Poly sum2 = state(2).at(pat("(1 3)(2 4)")) + state(2).at(pat("(1 4)(2 3)"));
  CHECK(sum2 == zpoly("(1+z1-z2)*(2-z1+z2)*(1+z3-z4)*(2-z3+z4)", 2));
  for (int n = 1; n <= 3; ++n) CHECK(perm_sum_check(state(n)).pass);
}

TEST_CASE("Pfaffian side against the matching expansion") {
  const std::vector<Rational> z{0, ratio(1, 3), ratio(1, 5), ratio(1, 7)};
  CHECK(pfaffian_side(z) == matching_side(z));
  const std::vector<Rational> two{ratio(1, 4), ratio(2, 9)};
  CHECK(pfaffian_side(two) == 1);
  const std::vector<Rational> bad{0, 1, ratio(1, 2), ratio(1, 3)};
  CHECK_THROWS_AS(pfaffian_side(bad), SingularPoint);
  const auto pts = certification_points(3, 10, 99);
  for (std::size_t k = 0; k < pts.random.size(); ++k) {
    CHECK(pfaffian_side(pts.random[k]) == matching_side(pts.random[k]));
  }
}

TEST_CASE("full sum at n <= 2") {
  const std::vector<RationalPoint> pts{{ratio(1, 2), ratio(1, 3)}};
  CHECK(full_sum_check(state(1), pts).pass);
  const std::vector<Rational> z{0, ratio(1, 3), ratio(1, 5), ratio(1, 7)};
  Rational total = 0;
  for (const auto& [pi, f] : state(2).entries) total += evaluate(f, z);
  CHECK(total == pfaffian_side(z));
  const std::vector<Rational> swapped{ratio(1, 3), 0, ratio(1, 5), ratio(1, 7)};
  Rational total_swapped = 0;
  for (const auto& [pi, f] : state(2).entries) total_swapped += evaluate(f, swapped);
  CHECK(total_swapped == total);
  const auto cert = certification_points(2, 20, 1);
  std::vector<RationalPoint> all(cert.sweeps);
  all.insert(all.end(), cert.random.begin(), cert.random.end());
  CHECK(full_sum_check(state(2), all).pass);
}

TEST_CASE("certification points") {
  for (int n = 1; n <= 3; ++n) {
    const auto pts = certification_points(n, 100, 5);
    CHECK(pts.sweeps.size() == static_cast<std::size_t>((2 * n + 1) * (2 * n * (n - 1) + 1)));
    CHECK(pts.random.size() == 100);
    const auto again = certification_points(n, 100, 5);
    CHECK(again.random == pts.random);
  }
}

TEST_CASE("recursion 2 -> 1") {
  const Poly& f = state(2).at(pat("(1 2)(3 4)"));
  const Poly shift = zpoly("z1+1", 2);
  const Poly want = zpoly("(1+z2-z3)*(1+z3-z1)*(1+z2-z4)*(1+z4-z1)", 2);
  CHECK(substitute(f, 1, shift) == substitute(want, 1, shift));
  CHECK(substitute(state(2).at(pat("(1 3)(2 4)")), 1, shift).is_zero());
  for (int site = 0; site < 4; ++site) CHECK(recursion_check(state(2), state(1), site).pass);
}

TEST_CASE("recursion 3 -> 2") {
  for (int site = 0; site < 6; ++site) CHECK(recursion_check(state(3), state(2), site).pass);
}

TEST_CASE("homogeneous numbers") {
  CHECK(homogeneous_number(1).determinant == 1);
  CHECK(homogeneous_number(2).determinant == 7);
  std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), 2 * i + 2 * j + 1, 2 * i);
      m[i][j] = b;
    }
  }
  CHECK(m[1] == std::vector<Rational>{3, 10, 21});
  CHECK(m[2] == std::vector<Rational>{5, 35, 126});
  CHECK(determinant(m) == 307);
  CHECK(homogeneous_number(3).determinant == 307);
  CHECK(homogeneous_number(6).determinant == Integer("1392263902567"));
  for (int n = 1; n <= 6; ++n) CHECK(homogeneous_number(n).agree());
}

TEST_CASE("lattice paths") {
  CHECK(lgv_count(1) == 1);
  CHECK(lgv_count(2) == 7);
  CHECK(lgv_count(3) == 307);
}

TEST_CASE("asymptotic table") {
  CHECK(asymptotic_report(0).empty());
  const auto rows = asymptotic_report(6);
  REQUIRE(rows.size() == 6);
  CHECK(rows.back().n == 6);
  CHECK(rows.back().value == Integer("1392263902567"));
  CHECK(asymptotic_limit() == doctest::Approx(0.4515827053));
}
