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

#include "crossloop/fixtures.hpp"
#include "crossloop/groundstate.hpp"
#include "doctest.h"
#include "shared.hpp"

using namespace crossloop;
using crossloop::testing::pat;
using crossloop::testing::state;
using crossloop::testing::zpoly;

TEST_CASE("base entry") {
  CHECK(psi_pi0(1) == Poly::constant(z_vars(1), 1));
  CHECK(psi_pi0(2) == zpoly("(1+z1-z2)*(1+z2-z3)*(1+z3-z4)*(1+z4-z1)", 2));
  CHECK(psi_pi0(3) == zpoly("(1+z1-z2)*(1+z1-z3)*(1+z2-z3)*(1+z2-z4)*(1+z3-z4)*(1+z3-z5)"
                            "*(1+z4-z5)*(1+z4-z6)*(1+z5-z1)*(1+z6-z1)*(1+z6-z2)*(1+z5-z6)",
                            3));
  const std::vector<Rational> origin(4);
  CHECK(evaluate(psi_pi0(2), origin) == 1);
}

TEST_CASE("Theta on the base entry") {
  const Poly t = theta_apply(psi_pi0(2), 0, 4);
  CHECK(t == zpoly("(1+z1-z2)*(1+z3-z4)*((1+z4-z2)*(2-z1+z2)+(1+z2-z3)*(1+z2-z4))", 2));
  CHECK(t == state(2).at(pat("(1 4)(2 3)")));
}

TEST_CASE("Theta is an involution and Delta is idempotent up to sign") {
  for (int n = 2; n <= 3; ++n) {
    const GroundState& gs = state(n);
    for (const auto& [pi, f] : gs.entries) {
      for (int i = 0; i < 2 * n; ++i) {
        if (pi.has_arch(i)) continue;
        CHECK(theta_apply(theta_apply(f, i, 2 * n), i, 2 * n) == f);
      }
      const Poly d = delta_apply(f, 0, 2 * n);
      CHECK(delta_apply(d, 0, 2 * n) == -d);
    }
  }
}

TEST_CASE("Delta on symmetric input") {
  CHECK(delta_apply(zpoly("z1*z2 + z3^2", 2), 0, 4).is_zero());
}

TEST_CASE("Delta reproduces the preimage sum at n = 2") {
  const GroundState& gs = state(2);
  const Poly lhs = delta_apply(gs.at(pat("(1 2)(3 4)")), 0, 4);
  CHECK(lhs == gs.at(pat("(1 3)(2 4)")) + gs.at(pat("(1 4)(2 3)")));
}

TEST_CASE("n = 2 reproduces the fixture") {
  CHECK(check_psi2_entries(state(2), load_fixture(default_fixture_dir(), "psi2_entries.json")).pass);
}

TEST_CASE("entries are integral of the right degree") {
  for (int n = 1; n <= 3; ++n) {
    const GroundState& gs = state(n);
    CHECK(gs.entries.size() == enumerate_patterns(n).size());
    for (const auto& [pi, f] : gs.entries) {
      CHECK(f.has_integer_coefficients());
      CHECK(f.total_degree() == 2 * n * (n - 1));
      for (int k = 0; k < 2 * n; ++k) CHECK(f.degree_in(k) <= 2 * (n - 1));
    }
  }
}

TEST_CASE("homogeneous values") {
  CHECK(homogeneous(state(1)).begin()->second == 1);
  for (int n = 2; n <= 3; ++n) {
    const auto h = homogeneous(state(n));
    Integer sum = 0;
    for (const auto& [pi, v] : h) sum += v;
    CHECK(sum == (n == 2 ? 7 : 307));
    const auto low = std::min_element(h.begin(), h.end(),
                                      [](const auto& a, const auto& b) { return a.second < b.second; });
    CHECK(low->second == 1);
    CHECK(h.at(LinkPattern::maximally_crossing(n)) == 1);
  }
}

TEST_CASE("vanishing at a shifted point") {
  const Poly& f = state(2).at(pat("(1 2)(3 4)"));
  CHECK(substitute(f, 2, zpoly("z2+1", 2)).is_zero());
}

TEST_CASE("top degree of the most nested n = 3 entry") {
  const Poly top = state(3).at(pat("(1 6)(2 5)(3 4)")).homogeneous_part(12);
  CHECK(top == zpoly("(z1-z2)*(z1-z3)*(z1-z4)*(z1-z5)*(z2-z3)*(z2-z4)"
                     "*(z2-z6)*(z3-z5)*(z3-z6)*(z4-z5)*(z4-z6)*(z5-z6)",
                     3));
}

TEST_CASE("cyclic covariance at n = 2") {
  const GroundState& gs = state(2);
  const std::vector<int> shift{3, 0, 1, 2};  // z_k -> z_{k-1}
  for (const auto& [pi, f] : gs.entries) {
    CHECK(gs.at(rotate(pi)).remap(shift) == f);
  }
}

TEST_CASE("verification suites at n <= 2") {
  for (int n = 1; n <= 2; ++n) {
    VerifyOptions opts;
    opts.points = 4;
    for (const auto& r : verify(state(n), opts)) {
      INFO(r.check << " " << r.witness.value_or(""));
      CHECK(r.pass);
    }
  }
}

TEST_CASE("structural suites at n = 3") {
  const GroundState& gs = state(3);
  CHECK(check_vanishing(gs).pass);
  CHECK(check_cyclic_covariance(gs).pass);
  CHECK(check_reflection(gs).pass);
  CHECK(check_delta_equations(gs).pass);
  CHECK(check_leading_terms(gs).pass);
  CHECK(check_factorization(gs).pass);
  CHECK(check_phi(3).pass);
}

TEST_CASE("restriction keeps chords") {
  const std::vector<int> keep{1, 2, 4, 5};
  CHECK(restrict_pattern(pat("(1 4)(2 3)(5 6)"), keep) == pat("(1 2)(3 4)"));
}

TEST_CASE("seed points avoid singular differences") {
  for (const auto& p : seed_points(6, 5, 0)) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        const Rational d = p[i] - p[j];
        CHECK(d != 0);
        CHECK(d != 1);
        CHECK(d != -1);
      }
    }
  }
}
