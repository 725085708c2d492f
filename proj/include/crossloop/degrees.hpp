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

#ifndef CROSSLOOP_DEGREES_HPP_
#define CROSSLOOP_DEGREES_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossloop/groundstate.hpp"
#include "crossloop/link_pattern.hpp"
#include "crossloop/poly.hpp"
#include "crossloop/report.hpp"

namespace crossloop {

class DenominatorResidue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// p1..pn, q1..qn with p_i = z_{n+1-i}, q_i = z_{n+i}.
VarNames pq_vars(int n);
VarNames ab_vars();
// t1..tn
VarNames t_vars(int n);

// A specialized polynomial and the power of its denominator factor that was
// cleared to obtain it.
struct SpecializationResult {
  Poly poly;
  int cleared_exponent = 0;
};

// Psi_pi with the in-block factors (1 + z_i - z_j) divided out, renamed to
// p, q. Throws NotPermutationPattern, NotDivisible.
Poly delta_from_psi(const GroundState& gs, const LinkPattern& pi);
Poly delta_pi0(int n);

// (2 d_i - tau_i) on the p block: tau_i swaps p_{i+1}, p_{i+2} (0-based i)
// and d_i = (tau_i - 1) / (p_{i+2} - p_{i+1}).
Poly delta_step(const Poly& delta, int i);
// p slot moved by f at `site` (0 <= site < n-1): the pair (p_{n-site-1},
// p_{n-site}) in 1-based names, returned as the 0-based slot of the first.
int delta_slot_for_site(int n, int site);

struct DeltaFamily {
  int n = 0;
  VarNames vars;
  std::map<LinkPattern, Poly> deltas;
  std::size_t edges_checked = 0;

  const Poly& at(const LinkPattern& pi) const { return deltas.at(pi); }
};

// Breadth-first from delta_{pi_0} over f-moves at sites 0..n-2. Every
// non-tree edge is checked. Throws Inconsistent.
DeltaFamily build_delta_recursive(int n);
DeltaFamily delta_family_from_psi(const GroundState& gs);

// ((A+B)/2)^{n(n-1)} delta(p_i = A/(A+B), q_i = B/(A+B)).
Poly bidegree(const Poly& delta, int n);

// Refldeg (a)-(c), block factorization, the rewritten recursion, the
// involution property, degree and integrality.
CheckReport verify_delta_symmetries(const DeltaFamily& family);
// Sum of the family against prod_{i<j} (2 + p_i - p_j)(2 - q_i + q_j).
CheckReport check_delta_sum(const DeltaFamily& family);
// Top-degree part against (-1)^c prod_{j != hat(i)} (p_i - q_j).
CheckReport check_delta_top_degree(const DeltaFamily& family);
// Agreement of the recursive family with the one divided out of Psi.
CheckReport compare_delta_families(const DeltaFamily& recursive,
                                   const DeltaFamily& from_psi);

// theta_i s = (1 + t_i)(1 + t_{i+1}) d_i s - tau_i s on slots (i, i+1).
Poly theta_t(const Poly& s, int i);

struct SchubertFamily {
  int n = 0;
  VarNames vars;
  std::map<LinkPattern, Poly> polys;

  const Poly& at(const LinkPattern& pi) const { return polys.at(pi); }
};

// s_{pi_0} = prod t_i^{n-i} and theta moves. Throws Inconsistent.
SchubertFamily schubert_family_recursive(int n);
// Specializes Psi_pi at z_{n+1-i} = (t_i - 1)/(t_i + 1), z_{n+i} = 0 and
// clears the prefactor. Throws DenominatorResidue, NotDivisible.
Poly schubert_from_psi(const GroundState& gs, const LinkPattern& pi);
SchubertFamily schubert_family_from_psi(const GroundState& gs);
// B^{n(n-1)} s(t_i = A/B).
Poly bidegree_from_schubert(const Poly& s, int n);
// Coefficients above the lowest degree are nonnegative (observation).
CheckReport observe_schubert_positivity(const SchubertFamily& family);
CheckReport compare_schubert_families(const SchubertFamily& recursive,
                                      const SchubertFamily& from_psi);

// z_1 = (t - 1)/(t + 1), other z = 0, times ((1 + t)/2)^{2(n-1)}.
SpecializationResult refined_entry(const Poly& psi, int n);
// Adds z_{n+1} = (u - 1)/(u + 1) with the matching factor in u, times 4.
SpecializationResult doubly_refined_entry(const Poly& psi, int n);

struct RefinedTable {
  int n = 0;
  std::map<LinkPattern, Poly> entries;  // in t
  Poly total;
  std::map<LinkPattern, Poly> doubly;   // in t, u
  Poly doubly_total;
};
RefinedTable refined_polys(const GroundState& gs);
// Integrality and nonnegativity of every refined entry (observation).
CheckReport observe_refined_positivity(const RefinedTable& table);

// z_i = A/(A+B) (i <= n), B/(A+B) above, times
// (A+B)^{2n(n-1) - (n-2) - (n mod 2)} 2^{-n(n-1)}.
int stated_ab_exponent(int n);
struct AbNormalization {
  Poly poly;              // with the stated exponent; zero when it fails
  int minimal_exponent;   // smallest power of (A+B) clearing the entry
  bool polynomial = false;
};
AbNormalization ab_normalized_entry(const Poly& psi, int n);
// Whole-state observation of the stated normalization.
CheckReport observe_ab_normalization(const GroundState& gs);

}  // namespace crossloop

#endif  // CROSSLOOP_DEGREES_HPP_
