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

#include "crossloop/stream.hpp"
#include "doctest.h"
#include "shared.hpp"

using namespace crossloop;
using crossloop::testing::state;

TEST_CASE("packed arithmetic agrees with Poly") {
  const VarNames v = z_vars(2);
  const Poly a = parse_poly("(1+z1-z2)^3*(2-z3+z4)", v);
  const Poly b = parse_poly("z1*z4 - 3*z2^2 + 5", v);
  const PackedPoly pa = to_packed(a), pb = to_packed(b);
  CHECK(to_poly(pa + pb, v) == a + b);
  CHECK(to_poly(pa - pb, v) == a - b);
  CHECK(to_poly(pa.swap_vars(0, 2), v) == a.swap_vars(0, 2));
  CHECK(to_poly(pa.divided_difference(1, 2), v) == divided_difference(a, 1, 2));
  CHECK(to_poly(pa.times_affine(1, {{0, 1}, {3, -1}}), v) == a * parse_poly("1+z1-z4", v));
  const Poly ell = parse_poly("1-z2+z3", v);
  CHECK(to_poly(to_packed(a * ell).div_one_minus(1, 2), v) == a);
  CHECK_THROWS_AS(to_packed(a + Poly::constant(v, 1)).div_one_minus(1, 2), NotDivisible);
  CHECK_THROWS_AS(to_packed(a * ratio(1, 2)), std::invalid_argument);
}

TEST_CASE("coefficient overflow is detected") {
  const PackedPoly big = PackedPoly::constant(INT64_MAX);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big.scaled(2), std::overflow_error);
}

TEST_CASE("streaming build matches the full build") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(to_poly(packed_psi_pi0(n), z_vars(n)) == psi_pi0(n));
    const GroundState& gs = state(n);
    std::size_t seen = 0;
    stream_build(n, [&](const LinkPattern& pi, const PackedPoly& f) {
      ++seen;
      CHECK(to_poly(f, gs.vars) == gs.at(pi));
    });
    CHECK(seen == gs.entries.size());
  }
}

TEST_CASE("stream summary at n <= 3") {
  const StreamSummary s3 = stream_summary(3);
  CHECK(s3.entries == 15);
  CHECK(s3.homogeneous_sum == 307);
  CHECK(s3.perm_sum_holds);
  CHECK(s3.refined_total.to_string() == "7*t^4 + 63*t^3 + 167*t^2 + 63*t + 7");
  CHECK(s3.homogeneous == homogeneous(state(3)));
}
