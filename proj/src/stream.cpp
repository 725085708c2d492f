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

#include <algorithm>
#include <stdexcept>

#include "crossloop/degrees.hpp"
#include "crossloop/groundstate.hpp"

namespace crossloop {

namespace {

using Term = PackedPoly::Term;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("PackedPoly: coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("PackedPoly: coefficient overflow");
  return r;
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, std::int64_t sb) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back({b[j].mono, checked_mul(sb, b[j].coef)});
      ++j;
    } else {
      const std::int64_t c = checked_add(a[i].coef, checked_mul(sb, b[j].coef));
      if (c != 0) out.push_back({a[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

// Multiplying by a monomial keeps the order as long as no byte overflows.
std::vector<Term> shifted(const std::vector<Term>& a, int slot, std::int64_t c) {
  std::vector<Term> out;
  out.reserve(a.size());
  const std::uint64_t u = PackedPoly::unit(slot);
  for (const auto& t : a) {
    if (PackedPoly::exponent(t.mono, slot) == 0xff) throw std::overflow_error("PackedPoly: exponent");
    out.push_back({t.mono + u, checked_mul(c, t.coef)});
  }
  return out;
}

}  // namespace

PackedPoly::PackedPoly(std::vector<Term> terms) : terms_(sorted(std::move(terms)).terms_) {}

PackedPoly PackedPoly::sorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  PackedPoly p;
  for (const auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef = checked_add(p.terms_.back().coef, t.coef);
    } else {
      p.terms_.push_back(t);
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coef == 0; });
  return p;
}

PackedPoly PackedPoly::constant(std::int64_t c) {
  PackedPoly p;
  if (c != 0) p.terms_.push_back({0, c});
  return p;
}

int PackedPoly::degree(std::uint64_t mono) {
  int d = 0;
  for (int k = 0; k < kSlots; ++k) d += exponent(mono, k);
  return d;
}

int PackedPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, degree(t.mono));
  return d;
}

std::int64_t PackedPoly::constant_term() const {
  return !terms_.empty() && terms_.front().mono == 0 ? terms_.front().coef : 0;
}

PackedPoly PackedPoly::operator+(const PackedPoly& o) const {
  PackedPoly p;
  p.terms_ = merge(terms_, o.terms_, 1);
  return p;
}

PackedPoly PackedPoly::operator-(const PackedPoly& o) const {
  PackedPoly p;
  p.terms_ = merge(terms_, o.terms_, -1);
  return p;
}

PackedPoly PackedPoly::scaled(std::int64_t c) const {
  if (c == 0) return {};
  PackedPoly p = *this;
  for (auto& t : p.terms_) t.coef = checked_mul(t.coef, c);
  return p;
}

PackedPoly PackedPoly::times_affine(std::int64_t c0,
                                    const std::vector<std::pair<int, std::int64_t>>& lin) const {
  PackedPoly acc = scaled(c0);
  for (const auto& [slot, c] : lin) {
    if (c == 0) continue;
    acc.terms_ = merge(acc.terms_, shifted(terms_, slot, c), 1);
  }
  return acc;
}

PackedPoly PackedPoly::swap_vars(int i, int j) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  const int si = 8 * (kSlots - 1 - i), sj = 8 * (kSlots - 1 - j);
  for (const auto& t : terms_) {
    const std::uint64_t a = (t.mono >> si) & 0xff, b = (t.mono >> sj) & 0xff;
    std::uint64_t m = t.mono & ~((std::uint64_t{0xff} << si) | (std::uint64_t{0xff} << sj));
    out.push_back({m | (b << si) | (a << sj), t.coef});
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
  PackedPoly p;
  p.terms_ = std::move(out);
  return p;
}

PackedPoly PackedPoly::divided_difference(int i, int j) const {
  std::vector<Term> out;
  const int si = 8 * (kSlots - 1 - i), sj = 8 * (kSlots - 1 - j);
  const std::uint64_t mask = ~((std::uint64_t{0xff} << si) | (std::uint64_t{0xff} << sj));
  for (const auto& t : terms_) {
    const int a = exponent(t.mono, i), b = exponent(t.mono, j);
    if (a == b) continue;
    const int low = std::min(a, b), gap = std::abs(a - b);
    const std::int64_t c = b > a ? t.coef : -t.coef;
    const std::uint64_t rest = t.mono & mask;
    for (int k = 0; k < gap; ++k) {
      out.push_back({rest | (std::uint64_t(low + k) << si) | (std::uint64_t(low + gap - 1 - k) << sj),
                     c});
    }
  }
  return PackedPoly(std::move(out));
}

PackedPoly PackedPoly::div_one_minus(int i, int j) const {
  // q_k = p_k + x_i q_{k-1} - x_j q_{k-1}
  const int top = total_degree();
  if (top < 0) return {};
  std::vector<std::vector<Term>> parts(top + 1);
  for (const auto& t : terms_) parts[degree(t.mono)].push_back(t);
  std::vector<Term> prev;
  std::vector<std::vector<Term>> quotient;
  for (int k = 0; k <= top; ++k) {
    std::vector<Term> qk = merge(parts[k], shifted(prev, i, 1), 1);
    qk = merge(qk, shifted(prev, j, 1), -1);
    if (k == top) {
      if (!qk.empty()) throw NotDivisible("PackedPoly: nonzero remainder");
      break;
    }
    quotient.push_back(qk);
    prev = std::move(qk);
  }
  std::vector<Term> all;
  for (auto& q : quotient) all.insert(all.end(), q.begin(), q.end());
  return PackedPoly(std::move(all));
}

bool PackedPoly::operator==(const PackedPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].mono != o.terms_[k].mono || terms_[k].coef != o.terms_[k].coef) return false;
  }
  return true;
}

PackedPoly to_packed(const Poly& p) {
  if (p.num_vars() > PackedPoly::kSlots) throw std::invalid_argument("to_packed: too many variables");
  std::vector<Term> out;
  for (const auto& [m, c] : p.terms()) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
      throw std::invalid_argument("to_packed: coefficient is not a machine integer");
    }
    std::uint64_t mono = 0;
    for (int k = 0; k < p.num_vars(); ++k) mono |= std::uint64_t(m[k]) << (8 * (PackedPoly::kSlots - 1 - k));
    out.push_back({mono, c.get_num().get_si()});
  }
  return PackedPoly(std::move(out));
}

Poly to_poly(const PackedPoly& p, const VarNames& vars) {
  std::vector<Poly::Term> out;
  out.reserve(p.size());
  std::vector<int> e(vars.size());
  for (const auto& t : p.terms()) {
    for (std::size_t k = 0; k < vars.size(); ++k) e[k] = PackedPoly::exponent(t.mono, static_cast<int>(k));
    out.emplace_back(Monomial(e), Rational(static_cast<long>(t.coef)));
  }
  return Poly(vars, std::move(out));
}

PackedPoly packed_psi_pi0(int n) {
  if (2 * n > PackedPoly::kSlots) throw std::invalid_argument("packed_psi_pi0: n > 4");
  // (1 + z_a - z_b) for every b at cyclic distance 1..n-1 after a.
  PackedPoly p = PackedPoly::constant(1);
  const int m = 2 * n;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const int gap = (b - a + m) % m;
      if (gap < n) p = p.times_affine(1, {{a, 1}, {b, -1}});
    }
  }
  return p;
}

PackedPoly packed_theta(const PackedPoly& f, int site, int points) {
  const int i = site, j = (site + 1) % points;
  const PackedPoly g = f + f.divided_difference(i, j);
  return f.swap_vars(i, j) + g.div_one_minus(i, j).scaled(2);
}

namespace {

void descend(const ThetaTree& tree, const std::map<LinkPattern, std::vector<LinkPattern>>& children,
             const LinkPattern& pi, const PackedPoly& f, int points,
             const std::function<void(const LinkPattern&, const PackedPoly&)>& visit) {
  visit(pi, f);
  auto it = children.find(pi);
  if (it == children.end()) return;
  for (const auto& child : it->second) {
    descend(tree, children, child, packed_theta(f, tree.nodes.at(child).site, points), points, visit);
  }
}

}  // namespace

void stream_build(int n, const std::function<void(const LinkPattern&, const PackedPoly&)>& visit) {
  const ThetaTree tree = build_theta_tree(n);
  std::map<LinkPattern, std::vector<LinkPattern>> children;
  for (const auto& pi : tree.order) {
    const auto& node = tree.nodes.at(pi);
    if (node.site >= 0) children[node.parent].push_back(pi);
  }
  descend(tree, children, tree.order.front(), packed_psi_pi0(n), 2 * n, visit);
}

StreamSummary stream_summary(int n) {
  StreamSummary s;
  s.n = n;
  const VarNames vars = z_vars(n);
  PackedPoly perm_sum;
  s.refined_total = Poly(VarNames{"t"});
  stream_build(n, [&](const LinkPattern& pi, const PackedPoly& f) {
    ++s.entries;
    s.max_terms = std::max(s.max_terms, f.size());
    const Integer h(static_cast<long>(f.constant_term()));
    s.homogeneous.emplace(pi, h);
    s.homogeneous_sum += h;
    if (is_permutation_pattern(pi)) perm_sum = perm_sum + f;
    // Only the terms in z_1 alone survive the refined specialization.
    std::vector<PackedPoly::Term> z1;
    for (const auto& t : f.terms()) {
      if ((t.mono & ~(std::uint64_t{0xff} << 56)) == 0) z1.push_back(t);
    }
    const Poly entry = refined_entry(to_poly(PackedPoly(std::move(z1)), vars), n).poly;
    s.refined_total += entry.with_vars(VarNames{"t"});
  });
  PackedPoly rhs = PackedPoly::constant(1);
  for (int block = 0; block < 2; ++block) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int a = block * n + i, b = block * n + j;
        rhs = rhs.times_affine(1, {{a, 1}, {b, -1}});
        rhs = rhs.times_affine(2, {{a, -1}, {b, 1}});
      }
    }
  }
  s.perm_sum_holds = perm_sum == rhs;
  return s;
}

}  // namespace crossloop
