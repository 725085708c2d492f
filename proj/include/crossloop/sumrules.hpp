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

#ifndef CROSSLOOP_SUMRULES_HPP_
#define CROSSLOOP_SUMRULES_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossloop/groundstate.hpp"
#include "crossloop/poly.hpp"
#include "crossloop/report.hpp"

namespace crossloop {

class SingularPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Even-dimensional skew-symmetric matrix; only the upper triangle is stored.
class SkewMatrix {
 public:
  explicit SkewMatrix(int dim);
  int dim() const { return dim_; }
  Rational at(int i, int j) const;
  void set(int i, int j, const Rational& v);  // i < j
  std::vector<std::vector<Rational>> dense() const;

 private:
  int dim_;
  std::vector<Rational> upper_;
};

// Skew elimination with exact pivoting. Odd dimension gives 0.
Rational pfaffian(const SkewMatrix& m);
Rational determinant(std::vector<std::vector<Rational>> m);

// sum_{P_n} Psi_pi against the product formula, symbolically.
CheckReport perm_sum_check(const GroundState& gs);

// Pf[f(z_i - z_j)] prod_{i<j} 1/f(z_i - z_j) with f(x) = x/(1 - x^2).
// Throws SingularPoint when some z_i - z_j is 0 or +-1.
Rational pfaffian_side(std::span<const Rational> z);
// The same scalar as a signed sum over perfect matchings.
Rational matching_side(std::span<const Rational> z);

struct CertificationPoints {
  // For each variable k, 2n(n-1)+1 points on the line through the base
  // point parallel to the z_k axis, then the same count on a generic line.
  std::vector<RationalPoint> sweeps;
  std::vector<RationalPoint> random;
};
// Deterministic in (n, seed). Every point avoids z_i - z_j in {0, +-1}.
CertificationPoints certification_points(int n, int random_count, std::uint64_t seed);

// Z_n = sum of all entries against the Pfaffian side at every point, plus
// invariance of Z_n under every adjacent transposition of each point and
// exact symmetry of the Z_n polynomial.
CheckReport full_sum_check(const GroundState& gs, std::span<const RationalPoint> points);

// z_{i+1} = z_i + 1 at `site` (0-based, cyclic): entries without the arch
// vanish, entries with it reduce to the smaller ground state.
CheckReport recursion_check(const GroundState& gs, const GroundState& prev, int site);

struct HomogeneousNumber {
  Integer determinant;
  // (-1)^n times the raw Pfaffian: the small-z limit of the Vandermonde
  // ratio contributes (-1)^{n(2n-1)}.
  Integer pfaffian;
  Integer pfaffian_raw;
  bool agree() const { return determinant == pfaffian; }
};
// det[C(2i+2j+1, 2i)] and Pf[(-1)^j C(i+j, i) [i+j odd]].
HomogeneousNumber homogeneous_number(int n);

// Vertex-disjoint n-tuples of lattice paths from (2i, 0) to (0, 2i+1) with
// steps (-1, 0) and (0, 1), counted by enumeration.
Integer lgv_count(int n);

struct AsymptoticRow {
  int n;
  Integer value;
  double scaled_log;  // ln(Z_n(0)) / (2 n^2)
};
std::vector<AsymptoticRow> asymptotic_report(int n_max);
double asymptotic_limit();  // ln(pi / 2)

}  // namespace crossloop

#endif  // CROSSLOOP_SUMRULES_HPP_
