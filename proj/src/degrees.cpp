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

#include "crossloop/degrees.hpp"

#include <algorithm>
#include <functional>

#include "crossloop/parallel.hpp"
#include "crossloop/poly_ops.hpp"

namespace crossloop {

VarNames pq_vars(int n) {
  VarNames v = make_vars("p", n);
  for (const auto& q : make_vars("q", n)) v.push_back(q);
  return v;
}

VarNames ab_vars() { return {"A", "B"}; }

VarNames t_vars(int n) { return make_vars("t", n); }

namespace {

Rational two_pow(int k) {
  Integer v = 1;
  v <<= k;
  return Rational(v);
}

// Keeps only terms whose exponents vanish outside `slots`.
Poly restrict_support(const Poly& p, const std::vector<int>& slots) {
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    int inside = 0;
    for (int s : slots) inside += m[s];
    if (inside == m.degree()) out.emplace_back(m, c);
  }
  return Poly(p.vars(), std::move(out));
}

// (x - 1)^e (x + 1)^(d - e) in the given universe.
std::vector<Poly> mobius_powers(const VarNames& vars, int slot, int d) {
  const Poly minus = Poly::affine(vars, -1, {{slot, 1}});
  const Poly plus = Poly::affine(vars, 1, {{slot, 1}});
  std::vector<Poly> out;
  for (int e = 0; e <= d; ++e) out.push_back(minus.pow(e) * plus.pow(d - e));
  return out;
}

// Family over the permutation sector grown from pi_0 by f-moves at sites
// 0..n-2; every move whose target is already known is compared.
std::map<LinkPattern, Poly> grow_family(
    int n, Poly root, const std::function<Poly(const Poly&, int)>& step,
    std::size_t* edges_checked, const std::string& what) {
  std::map<LinkPattern, Poly> out;
  const LinkPattern pi0 = LinkPattern::maximally_crossing(n);
  out.emplace(pi0, std::move(root));
  std::vector<LinkPattern> wave{pi0};
  std::size_t edges = 0;
  while (!wave.empty()) {
    std::vector<std::pair<LinkPattern, int>> moves;
    for (const auto& pi : wave) {
      for (int site = 0; site + 1 < n; ++site) moves.emplace_back(pi, site);
    }
    std::vector<Poly> results(moves.size());
    parallel_for(moves.size(), [&](std::size_t k) {
      results[k] = step(out.at(moves[k].first), moves[k].second);
    });
    std::vector<LinkPattern> next;
    for (std::size_t k = 0; k < moves.size(); ++k) {
      const LinkPattern to = apply_f(moves[k].first, moves[k].second);
      auto it = out.find(to);
      if (it == out.end()) {
        out.emplace(to, std::move(results[k]));
        next.push_back(to);
      } else {
        ++edges;
        if (!(it->second == results[k])) {
          throw Inconsistent(what + ": f" + std::to_string(moves[k].second + 1) +
                             " from " + moves[k].first.to_string() +
                             " disagrees at " + to.to_string());
        }
      }
    }
    wave = std::move(next);
  }
  if (edges_checked) *edges_checked = edges;
  return out;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[b[k] - 1];
  return out;
}

std::vector<int> inverse(const std::vector<int>& a) {
  std::vector<int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[a[k] - 1] = static_cast<int>(k) + 1;
  return out;
}

std::string one_line(const std::vector<int>& w) {
  std::string s;
  for (int x : w) s += std::to_string(x);
  return s;
}

}  // namespace

Poly delta_from_psi(const GroundState& gs, const LinkPattern& pi) {
  if (!is_permutation_pattern(pi)) {
    throw NotPermutationPattern("delta_from_psi: " + pi.to_string());
  }
  const int n = gs.n;
  std::vector<Poly> factors;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      factors.push_back(shifted_difference(gs.vars, i, j));
      factors.push_back(shifted_difference(gs.vars, n + i, n + j));
    }
  }
  const Poly q = exact_div_linear(gs.at(pi), factors);
  std::vector<int> map(2 * n);
  for (int k = 0; k < 2 * n; ++k) map[k] = k < n ? n - 1 - k : k;
  return q.remap(map, pq_vars(n));
}

Poly delta_pi0(int n) {
  const VarNames vars = pq_vars(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i + j < n + 1) pairs.emplace_back(i - 1, n + j - 1);
      if (i + j > n + 1) pairs.emplace_back(n + i - 1, j - 1);
    }
  }
  return product_of_shifted_differences(vars, pairs);
}

Poly delta_step(const Poly& delta, int i) {
  return divided_difference(delta, i + 1, i) * Rational(2) - delta.swap_vars(i, i + 1);
}

int delta_slot_for_site(int n, int site) { return n - site - 2; }

DeltaFamily build_delta_recursive(int n) {
  DeltaFamily f;
  f.n = n;
  f.vars = pq_vars(n);
  f.deltas = grow_family(
      n, delta_pi0(n),
      [n](const Poly& d, int site) { return delta_step(d, delta_slot_for_site(n, site)); },
      &f.edges_checked, "delta recursion");
  return f;
}

DeltaFamily delta_family_from_psi(const GroundState& gs) {
  DeltaFamily f;
  f.n = gs.n;
  f.vars = pq_vars(gs.n);
  for (const auto& pi : permutation_patterns(gs.n)) f.deltas.emplace(pi, delta_from_psi(gs, pi));
  return f;
}

Poly bidegree(const Poly& delta, int n) {
  const int big_n = n * (n - 1);
  const VarNames vars = ab_vars();
  std::map<std::pair<int, int>, Rational> grouped;
  for (const auto& [m, c] : delta.terms()) {
    int a = 0, b = 0;
    for (int k = 0; k < n; ++k) a += m[k];
    for (int k = n; k < 2 * n; ++k) b += m[k];
    if (a + b > big_n) {
      throw DenominatorResidue("bidegree: term of degree " + std::to_string(a + b));
    }
    grouped[{a, b}] += c;
  }
  const Poly sum = Poly::affine(vars, 0, {{0, 1}, {1, 1}});
  const Poly A = Poly::variable(vars, 0);
  const Poly B = Poly::variable(vars, 1);
  Poly out(vars);
  for (const auto& [ab, c] : grouped) {
    if (sgn(c) == 0) continue;
    out += A.pow(ab.first) * B.pow(ab.second) * sum.pow(big_n - ab.first - ab.second) * c;
  }
  return out * (1 / two_pow(big_n));
}

CheckReport verify_delta_symmetries(const DeltaFamily& family) {
  CheckReport r("delta-symmetries", family.n);
  const int n = family.n;
  const int m = 2 * n;
  const int big_n = n * (n - 1);
  std::vector<int> w0(n);
  for (int k = 0; k < n; ++k) w0[k] = n - k;

  std::vector<int> reverse_all(m), swap_blocks(m), reverse_each(m);
  for (int s = 0; s < m; ++s) {
    reverse_all[s] = m - 1 - s;
    swap_blocks[s] = (s + n) % m;
    reverse_each[s] = s < n ? n - 1 - s : 3 * n - 1 - s;
  }
  std::vector<std::pair<int, Rational>> negate;
  for (int s = 0; s < m; ++s) negate.emplace_back(s, -1);

  for (const auto& [pi, d] : family.deltas) {
    const std::string at = " at " + pi.to_string();
    ++r.cases;
    if (d.total_degree() != big_n || !d.has_integer_coefficients()) {
      r.fail("degree or integrality" + at);
    }
    const auto hat = perm_hat(pi);

    const LinkPattern half = rotate(pi, n);
    ++r.cases;
    if (perm_hat(half) != compose(compose(w0, inverse(hat)), w0) ||
        !(family.at(half).remap(reverse_all) == d)) {
      r.fail("half-turn symmetry" + at);
    }
    const LinkPattern refl = reflect(pi);
    ++r.cases;
    if (perm_hat(refl) != inverse(hat) ||
        !(family.at(refl).remap(swap_blocks).scale_vars(negate) == d)) {
      r.fail("reflection symmetry" + at);
    }
    const LinkPattern conj = from_perm_hat(compose(compose(w0, hat), w0));
    ++r.cases;
    if (!(family.at(conj).remap(reverse_each).scale_vars(negate) == d)) {
      r.fail("conjugation symmetry" + at);
    }

    for (int site = 0; site + 1 < n; ++site) {
      const int i = delta_slot_for_site(n, site);
      const Poly& moved = family.at(apply_f(pi, site));
      ++r.cases;
      const Poly lhs = moved + d;
      const Poly rhs = Poly::affine(family.vars, 2, {{i, 1}, {i + 1, -1}}) *
                       divided_difference(d, i + 1, i);
      if (!(lhs == rhs)) r.fail("rewritten recursion at f" + std::to_string(site + 1) + at);
      ++r.cases;
      if (!(delta_step(delta_step(d, i), i) == d)) {
        r.fail("involution at slot " + std::to_string(i + 1) + at);
      }
    }
  }

  // Block factorization for R1 = {1..r}.
  for (int rr = 1; rr < n; ++rr) {
    const DeltaFamily f1 = build_delta_recursive(rr);
    const DeltaFamily f2 = build_delta_recursive(n - rr);
    std::vector<int> keep1, keep2;
    for (int k = 0; k < n; ++k) (k < rr ? keep1 : keep2).push_back(k);
    for (int k = 0; k < n; ++k) (k < rr ? keep1 : keep2).push_back(n + k);
    std::sort(keep1.begin(), keep1.end());
    std::sort(keep2.begin(), keep2.end());
    std::vector<int> map1(2 * rr), map2(2 * (n - rr));
    for (int k = 0; k < rr; ++k) {
      map1[k] = n - rr + k;
      map1[rr + k] = n + k;
    }
    for (int k = 0; k < n - rr; ++k) {
      map2[k] = k;
      map2[n - rr + k] = n + rr + k;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n - rr; ++i) {
      for (int j = 1; j <= rr; ++j) pairs.emplace_back(i - 1, n + j - 1);
    }
    for (int i = rr + 1; i <= n; ++i) {
      for (int j = n - rr + 1; j <= n; ++j) pairs.emplace_back(n + i - 1, j - 1);
    }
    const Poly block = product_of_shifted_differences(family.vars, pairs);
    for (const auto& [pi, d] : family.deltas) {
      bool decomposable = true;
      for (int k = 0; k < rr; ++k) decomposable &= pi.partner(k) < n + rr;
      if (!decomposable) continue;
      ++r.cases;
      const Poly d1 = f1.at(restrict_pattern(pi, keep1)).remap(map1, family.vars);
      const Poly d2 = f2.at(restrict_pattern(pi, keep2)).remap(map2, family.vars);
      if (!(block * d1 * d2 == d)) {
        r.fail("block factorization with r = " + std::to_string(rr) + " at " + pi.to_string());
      }
    }
  }
  return r;
}

CheckReport check_delta_sum(const DeltaFamily& family) {
  CheckReport r("delta-sum", family.n);
  const int n = family.n;
  Poly sum(family.vars);
  for (const auto& [pi, d] : family.deltas) sum += d;
  Poly rhs = Poly::constant(family.vars, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      rhs *= Poly::affine(family.vars, 2, {{i, 1}, {j, -1}});
      rhs *= Poly::affine(family.vars, 2, {{n + i, -1}, {n + j, 1}});
    }
  }
  ++r.cases;
  if (!(sum == rhs)) r.fail("sum differs from the product formula");
  return r;
}

CheckReport check_delta_top_degree(const DeltaFamily& family) {
  CheckReport r("delta-top-degree", family.n);
  const int n = family.n;
  for (const auto& [pi, d] : family.deltas) {
    const auto hat = perm_hat(pi);
    Poly expect = Poly::constant(family.vars, crossings(pi) % 2 ? -1 : 1);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (j == hat[i - 1]) continue;
        expect *= Poly::affine(family.vars, 0, {{i - 1, 1}, {n + j - 1, -1}});
      }
    }
    ++r.cases;
    if (!(d.homogeneous_part(n * (n - 1)) == expect)) r.fail("top degree at " + pi.to_string());
  }
  return r;
}

CheckReport compare_delta_families(const DeltaFamily& recursive,
                                   const DeltaFamily& from_psi) {
  CheckReport r("delta-routes", recursive.n);
  for (const auto& [pi, d] : from_psi.deltas) {
    ++r.cases;
    auto it = recursive.deltas.find(pi);
    if (it == recursive.deltas.end() || !(it->second == d)) r.fail("differs at " + pi.to_string());
  }
  if (recursive.deltas.size() != from_psi.deltas.size()) r.fail("family sizes differ");
  return r;
}

Poly theta_t(const Poly& s, int i) {
  const Poly w = Poly::affine(s.vars(), 1, {{i, 1}}) * Poly::affine(s.vars(), 1, {{i + 1, 1}});
  return w * divided_difference(s, i + 1, i) - s.swap_vars(i, i + 1);
}

SchubertFamily schubert_family_recursive(int n) {
  SchubertFamily f;
  f.n = n;
  f.vars = t_vars(n);
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
  const Poly root(f.vars, {{Monomial(e), Rational(1)}});
  f.polys = grow_family(
      n, root,
      [n](const Poly& s, int site) { return theta_t(s, delta_slot_for_site(n, site)); },
      nullptr, "theta recursion");
  return f;
}

Poly schubert_from_psi(const GroundState& gs, const LinkPattern& pi) {
  if (!is_permutation_pattern(pi)) {
    throw NotPermutationPattern("schubert_from_psi: " + pi.to_string());
  }
  const int n = gs.n;
  const int d = 2 * (n - 1);
  const VarNames vars = t_vars(n);
  std::vector<int> slots(n);
  for (int k = 0; k < n; ++k) slots[k] = k;
  // z slot k carries t_{n-k}.
  std::vector<std::vector<Poly>> powers(n);
  for (int k = 0; k < n; ++k) powers[k] = mobius_powers(vars, n - 1 - k, d);

  const Poly support = restrict_support(gs.at(pi), slots);
  Poly num(vars);
  for (const auto& [m, c] : support.terms()) {
    Poly term = Poly::constant(vars, c);
    for (int k = 0; k < n; ++k) {
      if (m[k] > d) throw DenominatorResidue("schubert_from_psi: partial degree above 2(n-1)");
      term *= powers[k][m[k]];
    }
    num += term;
  }
  Poly den = Poly::constant(vars, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // 1 - t_i + 3 t_j + t_i t_j
      den *= Poly::affine(vars, 1, {{i, -1}, {j, 3}}) +
             Poly::variable(vars, i) * Poly::variable(vars, j);
    }
  }
  return exact_div(num, den) * (1 / two_pow(n * (n - 1)));
}

SchubertFamily schubert_family_from_psi(const GroundState& gs) {
  SchubertFamily f;
  f.n = gs.n;
  f.vars = t_vars(gs.n);
  const auto perms = permutation_patterns(gs.n);
  std::vector<Poly> out(perms.size());
  parallel_for(perms.size(), [&](std::size_t k) { out[k] = schubert_from_psi(gs, perms[k]); });
  for (std::size_t k = 0; k < perms.size(); ++k) f.polys.emplace(perms[k], out[k]);
  return f;
}

Poly bidegree_from_schubert(const Poly& s, int n) {
  const int big_n = n * (n - 1);
  const VarNames vars = ab_vars();
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : s.terms()) {
    const int e = m.degree();
    if (e > big_n) throw DenominatorResidue("bidegree_from_schubert: degree above n(n-1)");
    const int a[2] = {e, big_n - e};
    terms.emplace_back(Monomial(std::span<const int>(a, 2)), c);
  }
  return Poly(vars, std::move(terms));
}

CheckReport observe_schubert_positivity(const SchubertFamily& family) {
  CheckReport r("schubert-positivity", family.n);
  r.observation = true;
  for (const auto& [pi, s] : family.polys) {
    ++r.cases;
    int low = s.total_degree();
    for (const auto& [m, c] : s.terms()) low = std::min(low, m.degree());
    if (!s.has_integer_coefficients()) {
      r.fail("non-integer coefficient at " + pi.to_string());
      continue;
    }
    for (const auto& [m, c] : s.terms()) {
      if (m.degree() > low && sgn(c) < 0) {
        r.fail("negative coefficient at " + pi.to_string());
        break;
      }
    }
  }
  return r;
}

CheckReport compare_schubert_families(const SchubertFamily& recursive,
                                      const SchubertFamily& from_psi) {
  CheckReport r("schubert-routes", recursive.n);
  for (const auto& [pi, s] : from_psi.polys) {
    ++r.cases;
    auto it = recursive.polys.find(pi);
    if (it == recursive.polys.end() || !(it->second == s)) {
      r.fail("differs at " + pi.to_string() + " (hat " + one_line(perm_hat(pi)) + ")");
    }
  }
  if (recursive.polys.size() != from_psi.polys.size()) r.fail("family sizes differ");
  return r;
}

SpecializationResult refined_entry(const Poly& psi, int n) {
  const int d = 2 * (n - 1);
  const VarNames vars = {"t"};
  const auto powers = mobius_powers(vars, 0, d);
  const Poly support = restrict_support(psi, {0});
  Poly out(vars);
  for (const auto& [m, c] : support.terms()) {
    if (m[0] > d) throw DenominatorResidue("refined_entry: partial degree above 2(n-1)");
    out += powers[m[0]] * c;
  }
  return {out * (1 / two_pow(d)), d};
}

SpecializationResult doubly_refined_entry(const Poly& psi, int n) {
  const int d = 2 * (n - 1);
  const VarNames vars = {"t", "u"};
  const auto pt = mobius_powers(vars, 0, d);
  const auto pu = mobius_powers(vars, 1, d);
  const Poly support = restrict_support(psi, {0, n});
  Poly out(vars);
  for (const auto& [m, c] : support.terms()) {
    if (m[0] > d || m[n] > d) {
      throw DenominatorResidue("doubly_refined_entry: partial degree above 2(n-1)");
    }
    out += pt[m[0]] * pu[m[n]] * c;
  }
  return {out * (4 / two_pow(2 * d)), 2 * d};
}

RefinedTable refined_polys(const GroundState& gs) {
  RefinedTable t;
  t.n = gs.n;
  t.total = Poly(VarNames{"t"});
  t.doubly_total = Poly(VarNames{"t", "u"});
  for (const auto& pi : gs.patterns()) {
    const Poly one = refined_entry(gs.at(pi), gs.n).poly;
    const Poly two = doubly_refined_entry(gs.at(pi), gs.n).poly;
    t.total += one;
    t.doubly_total += two;
    t.entries.emplace(pi, one);
    t.doubly.emplace(pi, two);
  }
  return t;
}

CheckReport observe_refined_positivity(const RefinedTable& table) {
  CheckReport r("refined-positivity", table.n);
  r.observation = true;
  auto scan = [&](const std::map<LinkPattern, Poly>& entries, const std::string& label) {
    for (const auto& [pi, p] : entries) {
      ++r.cases;
      if (!p.has_integer_coefficients()) {
        r.fail(label + " entry not integral at " + pi.to_string());
        continue;
      }
      for (const auto& [m, c] : p.terms()) {
        if (sgn(c) < 0) {
          r.fail(label + " entry has a negative coefficient at " + pi.to_string());
          break;
        }
      }
    }
  };
  scan(table.entries, "refined");
  scan(table.doubly, "doubly refined");
  return r;
}

int stated_ab_exponent(int n) { return 2 * n * (n - 1) - (n - 2) - n % 2; }

AbNormalization ab_normalized_entry(const Poly& psi, int n) {
  const VarNames vars = ab_vars();
  std::map<std::pair<int, int>, Rational> grouped;
  int top = 0;
  for (const auto& [m, c] : psi.terms()) {
    int a = 0, b = 0;
    for (int k = 0; k < n; ++k) a += m[k];
    for (int k = n; k < 2 * n; ++k) b += m[k];
    grouped[{a, b}] += c;
    top = std::max(top, a + b);
  }
  const Poly sum = Poly::affine(vars, 0, {{0, 1}, {1, 1}});
  const Poly A = Poly::variable(vars, 0);
  const Poly B = Poly::variable(vars, 1);
  Poly num(vars);
  for (const auto& [ab, c] : grouped) {
    if (sgn(c) == 0) continue;
    num += A.pow(ab.first) * B.pow(ab.second) * sum.pow(top - ab.first - ab.second) * c;
  }
  AbNormalization out{Poly(vars), top, false};
  while (out.minimal_exponent > 0 && !num.is_zero() && divides_linear(sum, num)) {
    num = exact_div_linear(num, sum);
    --out.minimal_exponent;
  }
  const int stated = stated_ab_exponent(n);
  if (stated >= out.minimal_exponent) {
    out.polynomial = true;
    out.poly = num * sum.pow(stated - out.minimal_exponent) * (1 / two_pow(n * (n - 1)));
  }
  return out;
}

CheckReport observe_ab_normalization(const GroundState& gs) {
  CheckReport r("ab-normalization", gs.n);
  r.observation = true;
  const int stated = stated_ab_exponent(gs.n);
  int worst = 0;
  for (const auto& pi : gs.patterns()) {
    ++r.cases;
    const AbNormalization e = ab_normalized_entry(gs.at(pi), gs.n);
    worst = std::max(worst, e.minimal_exponent);
    if (!e.polynomial) {
      r.fail("exponent " + std::to_string(stated) + " leaves a denominator at " +
             pi.to_string() + " (needs " + std::to_string(e.minimal_exponent) + ")");
      continue;
    }
    if (!e.poly.has_integer_coefficients()) {
      r.fail("non-integer coefficient at " + pi.to_string());
      continue;
    }
    for (const auto& [m, c] : e.poly.terms()) {
      if (sgn(c) < 0) {
        r.fail("negative coefficient at " + pi.to_string());
        break;
      }
    }
  }
  r.params = {{"stated_exponent", stated}, {"largest_minimal_exponent", worst}};
  return r;
}

}  // namespace crossloop
