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

#ifndef CROSSLOOP_GROUNDSTATE_HPP_
#define CROSSLOOP_GROUNDSTATE_HPP_

#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crossloop/brauer.hpp"
#include "crossloop/link_pattern.hpp"
#include "crossloop/poly.hpp"
#include "crossloop/poly_ops.hpp"
#include "crossloop/report.hpp"

namespace crossloop {

class Inconsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntegralityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// z1 .. z{2n}
VarNames z_vars(int n);

struct GroundState {
  int n = 0;
  VarNames vars;
  std::map<LinkPattern, Poly> entries;
  std::map<LinkPattern, ThetaWord> words;

  const Poly& at(const LinkPattern& pi) const { return entries.at(pi); }
  // Entries in enumerate_patterns order.
  std::vector<LinkPattern> patterns() const { return enumerate_patterns(n); }
};

struct BuildReport {
  int n = 0;
  std::size_t pattern_count = 0;
  std::size_t max_term_count = 0;
  std::size_t edges_checked = 0;
  double seconds = 0;
  std::vector<CheckReport> checks;

  bool pass() const { return all_pass(checks); }
  nlohmann::json to_json() const;
};

Poly psi_pi0(int n);

// Theta_site F = [(2-u)(1+u) F^tau - 2(1-u) F] / (u (1-u)), u = z_i - z_{i+1},
// with i = site and i+1 taken mod `points`. Throws NotDivisible.
Poly theta_apply(const Poly& f, int site, int points);
// Delta_site F = (1+u)(1-u/2) (F^tau - F)/u.
Poly delta_apply(const Poly& f, int site, int points);

// Builds Psi_n from pi_0 along the Theta tree and checks every non-tree
// edge and the stabilizer relations. Throws Inconsistent on disagreement.
std::pair<GroundState, BuildReport> build(int n);

// Named verification suites.
inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "degree",        "theta-involution", "delta-idempotence", "vanishing",
      "cyclic",        "reflection",       "delta-equations",   "exchange",
      "leading-terms", "factorization",    "phi",               "cauchy-top",
      "tprime"};
  return names;
}

struct VerifyOptions {
  std::set<std::string> suites;  // empty: all
  // Rational point family offset for evaluation-based checks.
  Rational offset = 0;
  // Number of rational points for evaluation-based checks.
  int points = 5;
};

std::vector<CheckReport> verify(const GroundState& gs, const VerifyOptions& opts = {});

// Individual checks.
CheckReport check_degree_and_integrality(const GroundState& gs);
CheckReport check_theta_involution(const GroundState& gs);
CheckReport check_delta_idempotence(const GroundState& gs);
// Psi_pi divisible by (1 + z_i - z_j) whenever no chord lies inside the
// cyclic interval [i, j].
CheckReport check_vanishing(const GroundState& gs);
CheckReport check_cyclic_covariance(const GroundState& gs);
CheckReport check_reflection(const GroundState& gs);
// Sum over preimages under e_i equals Delta_i Psi_pi for every arch (i,i+1).
CheckReport check_delta_equations(const GroundState& gs);
CheckReport check_exchange_relation(const GroundState& gs,
                                    std::span<const RationalPoint> points);
CheckReport check_leading_terms(const GroundState& gs);
// Block factorization for fully decomposable permutation patterns.
CheckReport check_factorization(const GroundState& gs);
// Phi_n from the Theta expression equals the closed product and is symmetric
// under z_{2n} <-> z_1.
CheckReport check_phi(int n);
// Top-degree parts over the permutation sector sum to the squared
// Vandermonde product of each half.
CheckReport check_cauchy_top_degree(const GroundState& gs);
CheckReport check_tprime_eigenvector(const GroundState& gs,
                                     std::span<const RationalPoint> points);

// Psi_n evaluated at a rational point.
RationalVector evaluate_state(const GroundState& gs, std::span<const Rational> point);

// Entries at z = 0. Throws IntegralityViolation.
std::map<LinkPattern, Integer> homogeneous(const GroundState& gs);

// z_k = 1/prime_{k + shift} + offset for k = 1..m, with shift stepping through
// the list until the point avoids z_i - z_j in {0, +-1, +-2}.
std::vector<RationalPoint> seed_points(int m, int count, const Rational& offset);

// Pattern restricted to the point set `keep` (ascending), relabelled
// increasingly. Every chord must stay inside `keep`.
LinkPattern restrict_pattern(const LinkPattern& pi, std::span<const int> keep);

}  // namespace crossloop

#endif  // CROSSLOOP_GROUNDSTATE_HPP_
