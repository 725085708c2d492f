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

#include <algorithm>
#include <random>
#include <set>

#include "crossloop/link_pattern.hpp"
#include "doctest.h"
#include "shared.hpp"

using namespace crossloop;
using crossloop::testing::pat;

TEST_CASE("enumeration counts") {
  long double_factorial = 1;
  for (int n = 1; n <= 5; ++n) {
    double_factorial *= 2 * n - 1;
    const auto all = enumerate_patterns(n);
    CHECK(static_cast<long>(all.size()) == double_factorial);
    CHECK(std::set<LinkPattern>(all.begin(), all.end()).size() == all.size());
  }
  CHECK(enumerate_patterns(1).front() == pat("(1 2)"));
  CHECK(enumerate_patterns(4).size() == 105);
}

TEST_CASE("patterns are fixed-point-free involutions") {
  for (const auto& pi : enumerate_patterns(4)) {
    for (int i = 0; i < pi.points(); ++i) {
      CHECK(pi.partner(i) != i);
      CHECK(pi.partner(pi.partner(i)) == i);
    }
  }
  CHECK_THROWS_AS(LinkPattern(std::vector<int>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LinkPattern(std::vector<int>{1, 2, 0, 3}), std::invalid_argument);
}

TEST_CASE("e action") {
  const LinkPattern pi0 = LinkPattern::maximally_crossing(2);
  CHECK(pi0 == pat("(1 3)(2 4)"));
  CHECK(apply_e(pi0, 0) == pat("(1 2)(3 4)"));
  CHECK(apply_e(pat("(1 2)(3 4)"), 0) == pat("(1 2)(3 4)"));
  CHECK(apply_e(pat("(1 2)(3 4)"), 1) == pat("(2 3)(1 4)"));
  for (const auto& pi : enumerate_patterns(3)) {
    for (int i = 0; i < 6; ++i) CHECK(apply_e(pi, i).has_arch(i));
  }
}

TEST_CASE("f action") {
  CHECK(apply_f(LinkPattern::maximally_crossing(2), 0) == pat("(1 4)(2 3)"));
  CHECK(apply_f(pat("(1 2)(3 4)"), 0) == pat("(1 2)(3 4)"));
  for (const auto& pi : enumerate_patterns(3)) {
    for (int i = 0; i < 6; ++i) CHECK(apply_f(apply_f(pi, i), i) == pi);
  }
}

TEST_CASE("crossings") {
  CHECK(crossings(LinkPattern::maximally_crossing(3)) == 3);
  CHECK(crossings(pat("(1 2)(3 6)(4 5)")) == 0);
  CHECK(crossings(pat("(1 4)(2 3)")) == 0);
  for (int n = 1; n <= 5; ++n) {
    CHECK(crossings(LinkPattern::maximally_crossing(n)) == n * (n - 1) / 2);
  }
}

TEST_CASE("rotation and reflection") {
  CHECK(rotate(pat("(1 2)(3 4)")) == pat("(2 3)(4 1)"));
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_patterns(n);
    for (int trial = 0; trial < 20; ++trial) {
      const LinkPattern& pi = all[rng() % all.size()];
      CHECK(rotate(pi, 2 * n) == pi);
      CHECK(rotate(rotate(pi), -1) == pi);
      CHECK(reflect(reflect(pi)) == pi);
      CHECK(crossings(rotate(pi)) == crossings(pi));
    }
  }
  CHECK(reflect(pat("(1 2)(3 6)(4 5)")) == pat("(5 6)(1 4)(2 3)"));
}

TEST_CASE("Theta words") {
  CHECK(word_from_pi0(LinkPattern::maximally_crossing(3)).sites.empty());
  CHECK(word_from_pi0(pat("(1 3)(2 5)(4 6)")).one_based() == std::vector<int>{3});
  for (int n = 1; n <= 4; ++n) {
    const ThetaTree tree = build_theta_tree(n);
    CHECK(tree.nodes.size() == enumerate_patterns(n).size());
    for (const auto& [pi, node] : tree.nodes) {
      CHECK(replay(node.word, n) == pi);
      LinkPattern cur = LinkPattern::maximally_crossing(n);
      for (int s : node.word.sites) {
        CHECK_FALSE(cur.has_arch(s));
        cur = apply_f(cur, s);
      }
    }
  }
}

TEST_CASE("e preimages") {
  CHECK(preimages_e(LinkPattern::maximally_crossing(2), 0).empty());
  const auto pre = preimages_e(pat("(1 2)(3 4)"), 0);
  CHECK(std::set<LinkPattern>(pre.begin(), pre.end()) ==
        std::set<LinkPattern>{pat("(1 3)(2 4)"), pat("(1 4)(2 3)")});
  CHECK(preimages_e(pat("(1 2)"), 0).empty());
  // Oracle: filter the whole pattern space.
  for (const auto& pi : enumerate_patterns(3)) {
    for (int i = 0; i < 6; ++i) {
      if (!pi.has_arch(i)) continue;
      std::set<LinkPattern> want;
      for (const auto& q : enumerate_patterns(3)) {
        if (!(q == pi) && apply_e(q, i) == pi) want.insert(q);
      }
      const auto got = preimages_e(pi, i);
      CHECK(std::set<LinkPattern>(got.begin(), got.end()) == want);
    }
  }
}

TEST_CASE("permutation patterns") {
  CHECK(perm_hat(LinkPattern::maximally_crossing(3)) == std::vector<int>{3, 2, 1});
  CHECK_THROWS_AS(perm_hat(pat("(1 2)(3 4)")), NotPermutationPattern);
  long factorial = 1;
  for (int n = 1; n <= 5; ++n) {
    factorial *= n;
    const auto all = enumerate_patterns(n);
    const long count = std::count_if(all.begin(), all.end(), is_permutation_pattern);
    CHECK(count == factorial);
    CHECK(static_cast<long>(permutation_patterns(n).size()) == factorial);
    for (const auto& pi : permutation_patterns(n)) {
      const auto hat = perm_hat(pi);
      CHECK(from_perm_hat(hat) == pi);
      for (int i = 1; i <= n; ++i) CHECK(pi.one_based()[i - 1] == hat[n - i] + n);
    }
  }
}

TEST_CASE("arch removal") {
  CHECK(remove_arch(pat("(1 2)(3 6)(4 5)"), 0) == pat("(1 4)(2 3)"));
  CHECK(remove_arch(pat("(1 6)(2 3)(4 5)"), 5) == pat("(1 2)(3 4)"));
}

TEST_CASE("labels round-trip") {
  for (const auto& pi : enumerate_patterns(3)) {
    CHECK(parse_pattern(pi.to_string()) == pi);
  }
  CHECK(pat("(1 4)(2 3)").to_string() == "(1 4)(2 3)");
}
