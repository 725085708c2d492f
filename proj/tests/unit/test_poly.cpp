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

#include "crossloop/poly.hpp"
#include "crossloop/poly_ops.hpp"
#include "doctest.h"

using namespace crossloop;

namespace {

const VarNames kZ = {"z1", "z2", "z3"};

Poly p(const std::string& s) { return parse_poly(s, kZ); }

Poly random_poly(std::mt19937_64& rng) {
  std::vector<Poly::Term> terms;
  const int count = static_cast<int>(rng() % 5);
  for (int k = 0; k < count; ++k) {
    std::vector<int> e(3);
    for (auto& x : e) x = static_cast<int>(rng() % 3);
    terms.emplace_back(Monomial(e), ratio(static_cast<long>(rng() % 11) - 5,
                                          static_cast<long>(rng() % 4) + 1));
  }
  return Poly(kZ, std::move(terms));
}

}  // namespace

TEST_CASE("ring basics") {
  CHECK((p("z1") + p("-z1")).is_zero());
  CHECK(p("1+z1-z2") * p("1") == p("1+z1-z2"));
  CHECK(p("(z1-z2)*(z1+z2)") == p("z1^2-z2^2"));
  CHECK(Poly(kZ).total_degree() == -1);
  CHECK(p("z1^2*z3 + z2").total_degree() == 3);
  CHECK(p("z1^2*z3 + z2").degree_in(0) == 2);
}

TEST_CASE("terms are canonical") {
  const Poly a = p("z2 + z1 - z2 + 3*z1^2 - 3*z1^2");
  CHECK(a == p("z1"));
  REQUIRE(a.size() == 1);
  std::vector<Poly::Term> raw{{Monomial(std::vector<int>{1, 0, 0}), Rational(0)}};
  CHECK(Poly(kZ, raw).is_zero());
  const Poly b = p("z3 + z1 + z2^2 + 1");
  for (std::size_t k = 1; k < b.size(); ++k) CHECK(b.terms()[k - 1].first < b.terms()[k].first);
}

TEST_CASE("monomials pad with zeros") {
  const Monomial short_m(std::vector<int>{1, 2});
  const Monomial long_m(std::vector<int>{1, 2, 0, 0});
  CHECK(short_m == long_m);
  CHECK(long_m.degree() == 3);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("swap") {
  CHECK(p("z1").swap_vars(0, 1) == p("z2"));
  CHECK(p("z1+z2").swap_vars(0, 1) == p("z1+z2"));
  CHECK(p("1+z1-z2").swap_vars(0, 1) == p("1+z2-z1"));
}

TEST_CASE("divided difference") {
  CHECK(divided_difference(p("z1^2+z2^2+z1*z2*z3"), 0, 1).is_zero());
  CHECK(divided_difference(p("z1"), 0, 1) == p("-1"));
  CHECK(divided_difference(p("z1^2"), 0, 1) == p("-(z1+z2)"));
  CHECK(divided_difference(p("z1"), 0, 1, DividedDifference::kClassical) == p("1"));
}

TEST_CASE("exact division") {
  CHECK(exact_div_linear(p("(1+z1-z2)*z3"), p("1+z1-z2")) == p("z3"));
  CHECK(exact_div_linear(p("(z1-z2)^2"), p("z1-z2")) == p("z1-z2"));
  CHECK_THROWS_AS(exact_div_linear(p("z1"), p("1+z1-z2")), NotDivisible);
  CHECK(exact_div(p("(z1^2+z2*z3+1)*(z3-z1*z2)"), p("z1^2+z2*z3+1")) == p("z3-z1*z2"));
  CHECK_THROWS_AS(exact_div(p("z1^2+1"), p("z1^2+z2")), NotDivisible);
  CHECK(divides_linear(p("1+z1-z2"), p("(1+z1-z2)*(z1+z3)")));
  CHECK_FALSE(divides_linear(p("1+z1-z2"), p("z1")));
}

TEST_CASE("division inverts multiplication") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_poly(rng);
    Poly d = random_poly(rng);
    if (d.is_zero()) continue;
    CHECK(exact_div(a * d, d) == a);
  }
}

TEST_CASE("evaluation") {
  const std::vector<Rational> half_third{ratio(1, 2), ratio(1, 3), Rational(0)};
  CHECK(evaluate(p("1+z1-z2"), half_third) == ratio(7, 6));
  CHECK(evaluate(Poly(kZ), half_third) == 0);
}

TEST_CASE("linear fractional substitution") {
  const VarNames zt = {"z", "t"};
  const auto r = substitute_linear_fraction(parse_poly("1+z", zt), 0, {1, -1, 1, 1}, 1);
  CHECK(r.numerator == parse_poly("2*t", zt));
  CHECK(r.denom_exponent == 1);
  const auto c = substitute_linear_fraction(p("1+z1-z2"), 1, {0, 0, 0, 1}, 1);
  CHECK(c.numerator == p("1+z1"));
  CHECK(c.denom_exponent == 0);
}

TEST_CASE("substitute and remap") {
  CHECK(substitute(p("z1*z2+z3"), 1, p("z1+1")) == p("z1^2+z1+z3"));
  const std::vector<int> cycle{1, 2, 0};
  CHECK(p("z1+2*z2^2+3*z3^3").remap(cycle) == p("z2+2*z3^2+3*z1^3"));
}

TEST_CASE("rationals are reduced") {
  CHECK(ratio(7, 7) == 1);
  CHECK(ratio(2, 4).get_den() == 2);
  CHECK(ratio(3, -6) == ratio(-1, 2));
}

TEST_CASE("parser") {
  CHECK(p("2*(z1-z2)^2") == p("2*z1^2 - 4*z1*z2 + 2*z2^2"));
  CHECK_THROWS_AS(p("z1 +"), std::invalid_argument);
  CHECK_THROWS_AS(p("w"), std::invalid_argument);
}
