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

#include "crossloop/groundstate.hpp"

#include <chrono>
#include <numeric>

#include "crossloop/parallel.hpp"

namespace crossloop {

VarNames z_vars(int n) { return make_vars("z", 2 * n); }

nlohmann::json BuildReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) checks_json.push_back(c.to_json());
  return {{"n", n},
          {"pattern_count", pattern_count},
          {"max_term_count", max_term_count},
          {"edges_checked", edges_checked},
          {"seconds", seconds},
          {"pass", pass()},
          {"checks", checks_json}};
}

Poly psi_pi0(int n) {
  const VarNames vars = z_vars(n);
  const int m = 2 * n;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (j - i < n) pairs.emplace_back(i, j);
      if (j - i > n) pairs.emplace_back(j, i);
    }
  }
  return product_of_shifted_differences(vars, pairs);
}

namespace {

// u = z_i - z_j as a Poly, plus the pair of slots.
struct SitePair {
  int i, j;
};

SitePair site_pair(int site, int points) { return {site, (site + 1) % points}; }

Poly affine2(const VarNames& vars, const Rational& c0, int i, const Rational& ci,
             int j, const Rational& cj) {
  std::pair<int, Rational> c[] = {{i, ci}, {j, cj}};
  return Poly::affine(vars, c0, c);
}

}  // namespace

Poly theta_apply(const Poly& f, int site, int points) {
  // Same operator as F^tau + 2 (F + (F^tau - F)/u) / (1 - u).
  const auto [i, j] = site_pair(site, points);
  const Poly one_minus_u = affine2(f.vars(), 1, i, -1, j, 1);
  const Poly g = f + divided_difference(f, i, j, DividedDifference::kSwappedFirst);
  return f.swap_vars(i, j) + exact_div_linear(g, one_minus_u) * Rational(2);
}

Poly delta_apply(const Poly& f, int site, int points) {
  const auto [i, j] = site_pair(site, points);
  const VarNames& vars = f.vars();
  Poly q = divided_difference(f, i, j, DividedDifference::kSwappedFirst);
  if (q.is_zero()) return q;
  const Poly one_plus_u = affine2(vars, 1, i, 1, j, -1);
  const Poly half = affine2(vars, 1, i, Rational(-1, 2), j, Rational(1, 2));
  return one_plus_u * half * q;
}

std::pair<GroundState, BuildReport> build(int n) {
  const auto start = std::chrono::steady_clock::now();
  GroundState gs;
  gs.n = n;
  gs.vars = z_vars(n);
  BuildReport report;
  report.n = n;
  const int m = 2 * n;

  const ThetaTree tree = build_theta_tree(n);
  const LinkPattern root = LinkPattern::maximally_crossing(n);
  gs.entries.emplace(root, psi_pi0(n));

  // Waves by depth; entries within a wave are independent.
  std::size_t pos = 1;
  while (pos < tree.order.size()) {
    const int depth = tree.nodes.at(tree.order[pos]).depth;
    std::size_t end = pos;
    while (end < tree.order.size() && tree.nodes.at(tree.order[end]).depth == depth) ++end;
    std::vector<Poly> wave(end - pos);
    parallel_for(wave.size(), [&](std::size_t k) {
      const auto& node = tree.nodes.at(tree.order[pos + k]);
      wave[k] = theta_apply(gs.entries.at(node.parent), node.site, m);
    });
    for (std::size_t k = 0; k < wave.size(); ++k) {
      gs.entries.emplace(tree.order[pos + k], std::move(wave[k]));
    }
    pos = end;
  }
  for (const auto& [pi, node] : tree.nodes) gs.words.emplace(pi, node.word);

  // Word independence on non-tree edges; sampled beyond n = 3.
  std::vector<std::size_t> edge_ids(tree.extra_edges.size());
  std::iota(edge_ids.begin(), edge_ids.end(), 0);
  if (n > 3) {
    const std::size_t limit = 64;
    std::vector<std::size_t> sampled;
    const std::size_t stride = std::max<std::size_t>(1, edge_ids.size() / limit);
    for (std::size_t k = 0; k < edge_ids.size(); k += stride) sampled.push_back(k);
    edge_ids = std::move(sampled);
  }
  std::vector<char> edge_ok(edge_ids.size(), 1);
  parallel_for(edge_ids.size(), [&](std::size_t k) {
    const auto& e = tree.extra_edges[edge_ids[k]];
    edge_ok[k] = theta_apply(gs.entries.at(e.from), e.site, m) == gs.entries.at(e.to);
  });
  CheckReport words("word-independence", n);
  words.cases = edge_ids.size();
  for (std::size_t k = 0; k < edge_ids.size(); ++k) {
    if (!edge_ok[k]) {
      const auto& e = tree.extra_edges[edge_ids[k]];
      throw Inconsistent("Theta_" + std::to_string(e.site + 1) + " from " +
                         e.from.to_string() + " disagrees with entry " +
                         e.to.to_string());
    }
  }
  report.edges_checked = edge_ids.size();

  CheckReport stab("stabilizer", n);
  const Poly& base = gs.entries.at(root);
  // For n = 1 the only pattern is an arch and no move is admissible.
  for (int i = 0; i < n && n > 1; ++i) {
    ++stab.cases;
    const Poly lhs = theta_apply(theta_apply(base, n + i, m), i, m);
    if (!(lhs == base)) {
      throw Inconsistent("Theta_" + std::to_string(i + 1) + " Theta_" +
                         std::to_string(n + i + 1) + " does not fix the pi_0 entry");
    }
  }

  report.pattern_count = gs.entries.size();
  for (const auto& [pi, p] : gs.entries) {
    report.max_term_count = std::max(report.max_term_count, p.size());
  }
  report.checks.push_back(std::move(words));
  report.checks.push_back(std::move(stab));
  report.checks.push_back(check_degree_and_integrality(gs));
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {std::move(gs), std::move(report)};
}

CheckReport check_degree_and_integrality(const GroundState& gs) {
  CheckReport r("degree", gs.n);
  const int n = gs.n;
  if (gs.entries.size() != enumerate_patterns(n).size()) {
    r.fail("pattern count " + std::to_string(gs.entries.size()));
  }
  const LinkPattern root = LinkPattern::maximally_crossing(n);
  ++r.cases;
  if (!(gs.at(root) == psi_pi0(n))) r.fail("pi_0 entry differs from the base product");
  for (const auto& [pi, p] : gs.entries) {
    ++r.cases;
    if (p.total_degree() != 2 * n * (n - 1)) {
      r.fail(pi.to_string() + " has total degree " + std::to_string(p.total_degree()));
    }
    for (int k = 0; k < 2 * n; ++k) {
      if (p.degree_in(k) > 2 * (n - 1)) {
        r.fail(pi.to_string() + " exceeds the partial degree in z" + std::to_string(k + 1));
      }
    }
    if (!p.has_integer_coefficients()) r.fail(pi.to_string() + " has a non-integer coefficient");
  }
  return r;
}

CheckReport check_theta_involution(const GroundState& gs) {
  CheckReport r("theta-involution", gs.n);
  const int m = 2 * gs.n;
  for (const auto& [pi, p] : gs.entries) {
    for (int site = 0; site < m; ++site) {
      if (pi.has_arch(site)) continue;
      ++r.cases;
      if (!(theta_apply(theta_apply(p, site, m), site, m) == p)) {
        r.fail("Theta_" + std::to_string(site + 1) + "^2 on " + pi.to_string());
      }
    }
  }
  return r;
}

CheckReport check_delta_idempotence(const GroundState& gs) {
  CheckReport r("delta-idempotence", gs.n);
  const int m = 2 * gs.n;
  for (const auto& [pi, p] : gs.entries) {
    for (int site = 0; site < m; ++site) {
      ++r.cases;
      const Poly d = delta_apply(p, site, m);
      if (!(delta_apply(d, site, m) == -d)) {
        r.fail("Delta_" + std::to_string(site + 1) + "^2 != -Delta on " + pi.to_string());
      }
    }
  }
  return r;
}

CheckReport check_vanishing(const GroundState& gs) {
  CheckReport r("vanishing", gs.n);
  const int m = 2 * gs.n;
  for (const auto& [pi, p] : gs.entries) {
    for (int i = 0; i < m; ++i) {
      // Grow the cyclic interval [i, i+d] while it contains no chord.
      for (int d = 1; d < m; ++d) {
        bool chord_inside = false;
        for (int a = 0; a <= d && !chord_inside; ++a) {
          const int x = (i + a) % m;
          const int off = (pi.partner(x) - i + m) % m;
          chord_inside = off <= d;
        }
        if (chord_inside) break;
        ++r.cases;
        const int j = (i + d) % m;
        if (!divides_linear(shifted_difference(gs.vars, i, j), p)) {
          r.fail(pi.to_string() + " not divisible by 1+z" + std::to_string(i + 1) +
                 "-z" + std::to_string(j + 1));
        }
      }
    }
  }
  return r;
}

CheckReport check_cyclic_covariance(const GroundState& gs) {
  CheckReport r("cyclic", gs.n);
  const int m = 2 * gs.n;
  std::vector<int> shift(m);
  for (int k = 0; k < m; ++k) shift[k] = (k + 1) % m;
  for (const auto& [pi, p] : gs.entries) {
    ++r.cases;
    // rho = f_{2n-1} ... f_1 moves every label down by one. In
    // Psi_{rho pi}(z_2, ..., z_{2n}, z_1) argument slot k holds z_{k+1}.
    const Poly lhs = gs.at(rotate(pi, -1)).remap(shift);
    if (!(lhs == p)) r.fail("rotation of " + pi.to_string());
  }
  return r;
}

CheckReport check_reflection(const GroundState& gs) {
  CheckReport r("reflection", gs.n);
  const int m = 2 * gs.n;
  std::vector<int> flip(m);
  std::vector<std::pair<int, Rational>> negate;
  for (int k = 0; k < m; ++k) {
    flip[k] = m - 1 - k;
    negate.emplace_back(k, Rational(-1));
  }
  for (const auto& [pi, p] : gs.entries) {
    ++r.cases;
    const Poly lhs = gs.at(reflect(pi)).remap(flip).scale_vars(negate);
    if (!(lhs == p)) r.fail("reflection of " + pi.to_string());
  }
  return r;
}

CheckReport check_delta_equations(const GroundState& gs) {
  CheckReport r("delta-equations", gs.n);
  const int m = 2 * gs.n;
  for (const auto& [pi, p] : gs.entries) {
    for (int site = 0; site < m; ++site) {
      if (!pi.has_arch(site)) continue;
      ++r.cases;
      Poly sum(gs.vars);
      for (const auto& pre : preimages_e(pi, site)) sum += gs.at(pre);
      if (!(sum == delta_apply(p, site, m))) {
        r.fail("site " + std::to_string(site + 1) + " at " + pi.to_string());
      }
    }
  }
  return r;
}

RationalVector evaluate_state(const GroundState& gs, std::span<const Rational> point) {
  RationalVector v(gs.n);
  for (const auto& [pi, p] : gs.entries) v.set(pi, evaluate(p, point));
  return v;
}

namespace {

std::string point_string(std::span<const Rational> z) {
  std::string s = "(";
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (k) s += ", ";
    s += z[k].get_str();
  }
  return s + ")";
}

}  // namespace

CheckReport check_exchange_relation(const GroundState& gs,
                                    std::span<const RationalPoint> points) {
  CheckReport r("exchange", gs.n);
  const int m = 2 * gs.n;
  for (const auto& z : points) {
    const RationalVector lhs = evaluate_state(gs, z);
    for (int site = 0; site < m; ++site) {
      const int j = (site + 1) % m;
      RationalPoint swapped = z;
      std::swap(swapped[site], swapped[j]);
      ++r.cases;
      const RationalVector rhs = apply(OperatorSpec::rcheck(site, z[site], z[j]),
                                       evaluate_state(gs, swapped));
      if (!(lhs == rhs)) {
        r.fail("site " + std::to_string(site + 1) + " at " + point_string(z));
      }
    }
  }
  return r;
}

CheckReport check_leading_terms(const GroundState& gs) {
  CheckReport r("leading-terms", gs.n);
  const int n = gs.n;
  const int m = 2 * n;
  for (const auto& [pi, p] : gs.entries) {
    ++r.cases;
    Poly expected = Poly::constant(gs.vars, crossings(pi) % 2 ? -1 : 1);
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (pi.partner(a) == b) continue;
        expected *= affine2(gs.vars, 0, a, 1, b, -1);
      }
    }
    if (!(p.homogeneous_part(2 * n * (n - 1)) == expected)) {
      r.fail("top degree of " + pi.to_string());
    }
  }
  return r;
}

LinkPattern restrict_pattern(const LinkPattern& pi, std::span<const int> keep) {
  std::vector<int> label(pi.points(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) label[keep[k]] = static_cast<int>(k);
  std::vector<int> p(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const int partner = label[pi.partner(keep[k])];
    if (partner < 0) {
      throw std::invalid_argument("restrict_pattern: chord leaves the point set");
    }
    p[k] = partner;
  }
  return LinkPattern(std::move(p));
}

CheckReport check_factorization(const GroundState& gs) {
  CheckReport r("factorization", gs.n);
  const int n = gs.n;
  std::map<int, GroundState> smaller;
  auto state = [&](int size) -> const GroundState& {
    auto it = smaller.find(size);
    if (it == smaller.end()) it = smaller.emplace(size, build(size).first).first;
    return it->second;
  };
  // Size-s entry moved into the big universe at the given slots.
  auto embed = [&](const GroundState& small, const LinkPattern& sigma,
                   const std::vector<int>& slots) {
    return small.at(sigma).remap(slots, gs.vars);
  };
  for (const auto& pi : permutation_patterns(n)) {
    for (int rr = 1; rr < n; ++rr) {
      bool decomposable = true;
      for (int i = 0; i < rr; ++i) {
        if (pi.partner(i) >= n + rr) decomposable = false;
      }
      if (!decomposable) continue;
      ++r.cases;
      std::vector<int> r1, r2, s1, s2;
      for (int i = 0; i < n; ++i) (i < rr ? r1 : r2).push_back(i);
      for (int i = n; i < 2 * n; ++i) (i < n + rr ? s1 : s2).push_back(i);
      std::vector<int> keep1(r1), keep2(r2);
      keep1.insert(keep1.end(), s1.begin(), s1.end());
      keep2.insert(keep2.end(), s2.begin(), s2.end());
      std::vector<std::pair<int, int>> x;
      for (int a : r1) for (int b : r2) x.emplace_back(a, b);
      for (int a : r2) for (int b : s1) x.emplace_back(a, b);
      for (int a : s1) for (int b : s2) x.emplace_back(a, b);
      for (int a : s2) for (int b : r1) x.emplace_back(a, b);
      const Poly expected = product_of_shifted_differences(gs.vars, x) *
                            embed(state(rr), restrict_pattern(pi, keep1), keep1) *
                            embed(state(n - rr), restrict_pattern(pi, keep2), keep2);
      if (!(gs.at(pi) == expected)) {
        r.fail(pi.to_string() + " with r = " + std::to_string(rr));
      }
    }
  }
  return r;
}

CheckReport check_phi(int n) {
  CheckReport r("phi", n);
  if (n < 2) return r;
  const int m = 2 * n;
  const VarNames vars = z_vars(n);
  const Poly base = psi_pi0(n);
  // Theta_{s_1} ... Theta_{s_k} base, rightmost first; sites 1-based.
  auto word = [&](const std::vector<int>& sites) {
    Poly f = base;
    for (auto it = sites.rbegin(); it != sites.rend(); ++it) f = theta_apply(f, *it - 1, m);
    return f;
  };
  std::vector<int> full;
  for (int k = 1; k <= n - 1; ++k) full.push_back(k);
  // (1 + z_{2n} - z_1) Phi_n
  const Poly a_2n_1 = shifted_difference(vars, m - 1, 0);
  Poly scaled = a_2n_1 * word(full);
  for (int j = 2; j <= n; ++j) {
    std::vector<int> w;
    for (int k = 1; k <= n - 1; ++k) {
      if (k != j - 1) w.push_back(k);
    }
    scaled -= word(w) * Rational(2);
  }
  ++r.cases;
  Poly phi;
  try {
    phi = exact_div_linear(scaled, a_2n_1);
  } catch (const NotDivisible&) {
    r.fail("Phi_n is not a polynomial");
    return r;
  }
  std::vector<int> shift(m - 2);
  for (int k = 0; k < m - 2; ++k) shift[k] = k + 1;
  Poly closed = psi_pi0(n - 1).remap(shift, vars);
  auto a = [&](int i, int j) { return shifted_difference(vars, i - 1, j - 1); };
  for (int j = 2; j <= n; ++j) {
    closed *= a(1, j) * a(m, j) * a(j + n - 1, 1) * a(j + n - 1, m);
  }
  if (!(phi == closed)) r.fail("Phi_n differs from the closed product");
  ++r.cases;
  if (!(phi.swap_vars(0, m - 1) == phi)) r.fail("Phi_n not symmetric in z_1, z_2n");
  return r;
}

CheckReport check_cauchy_top_degree(const GroundState& gs) {
  CheckReport r("cauchy-top", gs.n);
  const int n = gs.n;
  Poly sum(gs.vars);
  for (const auto& pi : permutation_patterns(n)) {
    sum += gs.at(pi).homogeneous_part(2 * n * (n - 1));
  }
  std::vector<int> left(n), right(n);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), n);
  const Poly expected =
      vandermonde(gs.vars, left).pow(2) * vandermonde(gs.vars, right).pow(2);
  ++r.cases;
  if (!(sum == expected)) r.fail("top-degree sum differs from the Cauchy product");
  return r;
}

CheckReport check_tprime_eigenvector(const GroundState& gs,
                                     std::span<const RationalPoint> points) {
  CheckReport r("tprime", gs.n);
  for (const auto& z : points) {
    ++r.cases;
    const RationalVector v = evaluate_state(gs, z);
    if (!(tprime_apply(gs.n, z, v) == v)) r.fail("T' Psi != Psi at " + point_string(z));
  }
  return r;
}

std::vector<CheckReport> verify(const GroundState& gs, const VerifyOptions& opts) {
  auto want = [&](const std::string& name) {
    return opts.suites.empty() || opts.suites.contains(name);
  };
  const auto points = seed_points(2 * gs.n, opts.points, opts.offset);
  std::vector<CheckReport> out;
  if (want("degree")) out.push_back(check_degree_and_integrality(gs));
  if (want("theta-involution")) out.push_back(check_theta_involution(gs));
  if (want("delta-idempotence")) out.push_back(check_delta_idempotence(gs));
  if (want("vanishing")) out.push_back(check_vanishing(gs));
  if (want("cyclic")) out.push_back(check_cyclic_covariance(gs));
  if (want("reflection")) out.push_back(check_reflection(gs));
  if (want("delta-equations")) out.push_back(check_delta_equations(gs));
  if (want("exchange")) out.push_back(check_exchange_relation(gs, points));
  if (want("leading-terms")) out.push_back(check_leading_terms(gs));
  if (want("factorization")) out.push_back(check_factorization(gs));
  if (want("phi")) out.push_back(check_phi(gs.n));
  if (want("cauchy-top")) out.push_back(check_cauchy_top_degree(gs));
  if (want("tprime")) out.push_back(check_tprime_eigenvector(gs, points));
  return out;
}

std::map<LinkPattern, Integer> homogeneous(const GroundState& gs) {
  std::map<LinkPattern, Integer> out;
  for (const auto& [pi, p] : gs.entries) {
    const Rational v = p.coefficient(Monomial());
    if (v.get_den() != 1) {
      throw IntegralityViolation(pi.to_string() + " evaluates to " + v.get_str());
    }
    out.emplace(pi, v.get_num());
  }
  return out;
}

namespace {

std::vector<int> first_primes(std::size_t count) {
  std::vector<int> primes;
  for (int c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (int p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

}  // namespace

std::vector<RationalPoint> seed_points(int m, int count, const Rational& offset) {
  const auto primes = first_primes(static_cast<std::size_t>(m + count));
  std::vector<RationalPoint> out;
  for (int t = 0; t < count; ++t) {
    RationalPoint z(m);
    // Distinct unit fractions differ by less than 1/2 and never coincide.
    for (int k = 0; k < m; ++k) z[k] = Rational(1, primes[t + k]) + offset;
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace crossloop
