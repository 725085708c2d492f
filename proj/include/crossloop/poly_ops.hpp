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

#ifndef CROSSLOOP_POLY_OPS_HPP_
#define CROSSLOOP_POLY_OPS_HPP_

#include <span>
#include <string>
#include <vector>

#include "crossloop/poly.hpp"

namespace crossloop {

using RationalPoint = std::vector<Rational>;

enum class DividedDifference {
  // (F^tau - F) / (x_i - x_j)
  kSwappedFirst,
  // (F - F^tau) / (x_i - x_j), the classical Schubert-calculus sign.
  kClassical,
};

Poly divided_difference(const Poly& p, int i, int j,
                        DividedDifference sign = DividedDifference::kSwappedFirst);

// Returns q with q * ell == p. `ell` must have total degree 1 or be a nonzero
// constant. Throws NotDivisible when the remainder is nonzero.
Poly exact_div_linear(const Poly& p, const Poly& ell);

// Divides by a product of affine forms, one at a time.
Poly exact_div_linear(const Poly& p, std::span<const Poly> factors);

// Exact quotient by an arbitrary nonzero polynomial (lex leading-term
// division). Throws NotDivisible when the remainder is nonzero.
Poly exact_div(const Poly& p, const Poly& d);
// True iff ell divides p; never throws.
bool divides_linear(const Poly& ell, const Poly& p);

Rational evaluate(const Poly& p, std::span<const Rational> point);

// Replaces x_slot by `value` (any polynomial over a compatible universe).
Poly substitute(const Poly& p, int slot, const Poly& value);

// z -> (a s + b) / (c s + d)
struct Mobius {
  Rational a, b, c, d;
};

struct FractionResult {
  Poly numerator;
  // p(...) == numerator / (c s + d)^denom_exponent
  int denom_exponent = 0;
};

// Substitutes x_slot -> (a s + b)/(c s + d) where s is x_new_slot. The
// numerator is returned in the same universe; the exponent equals the
// partial degree of p in x_slot (0 for a constant substitution c == 0,
// d == 1). If new_slot != slot, p must not depend on x_new_slot.
FractionResult substitute_linear_fraction(const Poly& p, int slot,
                                          const Mobius& map, int new_slot);

// Univariate-in-s polynomial made homogeneous of degree `degree` in (s, h):
// s^k -> s^k h^(degree-k). Throws std::domain_error if some term exceeds
// the degree.
Poly homogenize(const Poly& p, int s_slot, int h_slot, int degree);

// Product of affine forms (1 + x_i - x_j) over the given ordered pairs.
Poly product_of_shifted_differences(const VarNames& vars,
                                    std::span<const std::pair<int, int>> pairs);

// prod_{i<j in slots} (x_i - x_j)
Poly vandermonde(const VarNames& vars, std::span<const int> slots);

// 1 + x_i - x_j
Poly shifted_difference(const VarNames& vars, int i, int j);

// Parses an integer-coefficient expression built from +, -, *, ^, parentheses,
// integer literals and the given variable names ("A^2*B + 3*(z1-z2)").
// Throws std::invalid_argument on malformed input.
Poly parse_poly(const std::string& text, const VarNames& vars);

}  // namespace crossloop

#endif  // CROSSLOOP_POLY_OPS_HPP_
