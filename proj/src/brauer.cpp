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

#include "crossloop/brauer.hpp"

#include <functional>

namespace crossloop {

GeneratorWeights weights(const OperatorSpec& op) {
  using Kind = OperatorSpec::Kind;
  switch (op.kind) {
    case Kind::kIdentity:
      return {1, 0, 0};
    case Kind::kE:
      return {0, 0, 1};
    case Kind::kF:
      return {0, 1, 0};
    case Kind::kX:
      return {1 - op.u, op.u / 2 * (1 - op.u), op.u};
    case Kind::kRcheck: {
      const Rational x = op.w - op.z;
      const Rational norm = (1 - x / 2) * (1 + x);
      if (sgn(norm) == 0) {
        throw SingularNormalization("Rcheck(z, w) with w - z = " + x.get_str());
      }
      return {(1 - x) / norm, x / 2 * (1 - x) / norm, x / norm};
    }
  }
  return {};
}

template <typename Scalar>
PatternVector<Scalar> apply(const OperatorSpec& op, const PatternVector<Scalar>& v) {
  const GeneratorWeights g = weights(op);
  PatternVector<Scalar> out(v.n());
  for (const auto& [pi, c] : v.entries()) {
    if (sgn(g.identity) != 0) out.add(pi, c * g.identity);
    if (sgn(g.f) != 0) out.add(apply_f(pi, op.site), c * g.f);
    if (sgn(g.e) != 0) out.add(apply_e(pi, op.site), c * g.e);
  }
  return out;
}

template <typename Scalar>
PatternVector<Scalar> apply_product(std::span<const OperatorSpec> ops,
                                    const PatternVector<Scalar>& v) {
  PatternVector<Scalar> r = v;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) r = apply(*it, r);
  return r;
}

template PatternVector<Rational> apply(const OperatorSpec&, const PatternVector<Rational>&);
template PatternVector<Poly> apply(const OperatorSpec&, const PatternVector<Poly>&);
template PatternVector<Rational> apply_product(std::span<const OperatorSpec>,
                                               const PatternVector<Rational>&);
template PatternVector<Poly> apply_product(std::span<const OperatorSpec>,
                                           const PatternVector<Poly>&);

Rational dot(const RationalVector& form, const RationalVector& v) {
  Rational s = 0;
  for (const auto& [pi, c] : v.entries()) s += form.get(pi) * c;
  return s;
}

RationalVector pullback(const OperatorSpec& op, const RationalVector& form) {
  RationalVector out(form.n());
  for (const auto& pi : enumerate_patterns(form.n())) {
    Rational c = dot(form, apply(op, RationalVector::basis(pi)));
    if (sgn(c) != 0) out.set(pi, c);
  }
  return out;
}

RationalVector all_ones_form(int n) {
  RationalVector v(n);
  for (const auto& pi : enumerate_patterns(n)) v.set(pi, 1);
  return v;
}

RationalVector permutation_sector_form(int n) {
  RationalVector v(n);
  for (const auto& pi : permutation_patterns(n)) v.set(pi, 1);
  return v;
}

std::vector<OperatorSpec> tprime_factors(int n, std::span<const Rational> z) {
  if (static_cast<int>(z.size()) != 2 * n) {
    throw std::invalid_argument("tprime_factors: need 2n spectral parameters");
  }
  const int m = 2 * n;
  // 1-based label k -> 0-based index.
  auto idx = [m](int k) { return ((k - 1) % m + m) % m; };
  std::vector<OperatorSpec> ops;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      ops.push_back(OperatorSpec::rcheck(idx(i + 2 * j - 2), z[idx(2 * j - 1)],
                                         z[idx(2 * i + 2 * j - 2)]));
    }
  }
  return ops;
}

RationalVector rotate_vector(const RationalVector& v, int times) {
  RationalVector out(v.n());
  for (const auto& [pi, c] : v.entries()) out.set(rotate(pi, times), c);
  return out;
}

RationalVector tprime_apply(int n, std::span<const Rational> z,
                            const RationalVector& v) {
  const auto ops = tprime_factors(n, z);
  return apply_product<Rational>(ops, rotate_vector(v, n));
}

namespace {

using Ops = std::vector<OperatorSpec>;

// Compares two operator words on every basis vector.
bool same_operator(int n, const Ops& lhs, const Ops& rhs, const Rational& scale,
                   std::string* witness) {
  for (const auto& pi : enumerate_patterns(n)) {
    const auto v = RationalVector::basis(pi);
    const auto a = apply_product<Rational>(lhs, v);
    const auto b = apply_product<Rational>(rhs, v) * scale;
    if (!(a == b)) {
      *witness = "basis vector " + pi.to_string();
      return false;
    }
  }
  return true;
}

std::string site_label(int site) { return std::to_string(site + 1); }

}  // namespace

CheckReport check_brauer_relations(int n) {
  CheckReport r("brauer-relations", n);
  const int m = 2 * n;
  auto E = OperatorSpec::e;
  auto F = OperatorSpec::f;
  auto expect = [&](const std::string& name, const Ops& lhs, const Ops& rhs) {
    std::string w;
    ++r.cases;
    if (!same_operator(n, lhs, rhs, 1, &w)) r.fail(name + " fails on " + w);
  };
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    const std::string s = site_label(i);
    expect("e" + s + "^2 = e" + s, {E(i), E(i)}, {E(i)});
    expect("f" + s + "^2 = 1", {F(i), F(i)}, {});
    expect("f" + s + " e" + s + " = e" + s, {F(i), E(i)}, {E(i)});
    expect("e" + s + " f" + s + " = e" + s, {E(i), F(i)}, {E(i)});
    if (m > 2) {
      const std::string t = site_label(j);
      expect("e" + s + " e" + t + " e" + s + " = e" + s, {E(i), E(j), E(i)}, {E(i)});
      expect("e" + t + " e" + s + " e" + t + " = e" + t, {E(j), E(i), E(j)}, {E(j)});
      expect("braid f" + s + " f" + t, {F(i), F(j), F(i)}, {F(j), F(i), F(j)});
      expect("f" + s + " e" + t + " e" + s + " = f" + t + " e" + s,
             {F(i), E(j), E(i)}, {F(j), E(i)});
      expect("e" + s + " e" + t + " f" + s + " = e" + s + " f" + t,
             {E(i), E(j), F(i)}, {E(i), F(j)});
    }
    for (int k = 0; k < m; ++k) {
      const int d = std::min((k - i + m) % m, (i - k + m) % m);
      if (d <= 1) continue;
      const std::string t = site_label(k);
      expect("e" + s + " e" + t + " commute", {E(i), E(k)}, {E(k), E(i)});
      expect("e" + s + " f" + t + " commute", {E(i), F(k)}, {F(k), E(i)});
      expect("f" + s + " f" + t + " commute", {F(i), F(k)}, {F(k), F(i)});
    }
  }
  return r;
}

CheckReport check_yang_baxter(int n, const Rational& u, const Rational& v) {
  CheckReport r("yang-baxter", n);
  r.params = {{"u", u.get_str()}, {"v", v.get_str()}};
  const int m = 2 * n;
  auto X = OperatorSpec::x;
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    std::string w;
    ++r.cases;
    if (m > 2 && !same_operator(n, {X(i, u), X(j, u + v), X(i, v)},
                                {X(j, v), X(i, u + v), X(j, u)}, 1, &w)) {
      r.fail("YBE at site " + site_label(i) + ", " + w);
    }
    ++r.cases;
    const Rational scale = (1 - u * u) * (1 - u * u / 4);
    if (!same_operator(n, {X(i, u), X(i, -u)}, {}, scale, &w)) {
      r.fail("unitarity at site " + site_label(i) + ", " + w);
    }
  }
  return r;
}

CheckReport check_rcheck_unitarity(int n, int site, const Rational& z,
                                   const Rational& w) {
  CheckReport r("rcheck-unitarity", n);
  r.params = {{"site", site + 1}, {"z", z.get_str()}, {"w", w.get_str()}};
  std::string wit;
  ++r.cases;
  if (!same_operator(n, {OperatorSpec::rcheck(site, z, w), OperatorSpec::rcheck(site, w, z)},
                     {}, 1, &wit)) {
    r.fail(wit);
  }
  return r;
}

CheckReport check_vn_invariance(int n, int site, const Rational& z,
                                const Rational& w) {
  CheckReport r("vn-invariance", n);
  r.params = {{"site", site + 1}, {"z", z.get_str()}, {"w", w.get_str()}};
  const auto form = all_ones_form(n);
  ++r.cases;
  if (!(pullback(OperatorSpec::rcheck(site, z, w), form) == form)) {
    r.fail("v_n Rcheck != v_n");
  }
  return r;
}

CheckReport check_bn_relation(int n, int site, const Rational& z,
                              const Rational& w) {
  CheckReport r("bn-relation", n);
  r.params = {{"site", site + 1}, {"z", z.get_str()}, {"w", w.get_str()}};
  if (site == n - 1 || site == 2 * n - 1) {
    throw std::invalid_argument("check_bn_relation: site must differ from n and 2n");
  }
  const Rational x = w - z;
  const Rational den = (1 - x / 2) * (1 + x);
  if (sgn(den) == 0) throw SingularNormalization("check_bn_relation: singular point");
  const Rational lambda = (1 + x / 2) * (1 - x) / den;
  const auto form = permutation_sector_form(n);
  ++r.cases;
  const auto lhs = pullback(OperatorSpec::rcheck(site, z, w), form);
  if (!(lhs == form * lambda)) {
    r.fail("b_n Rcheck != lambda b_n with lambda = " + lambda.get_str());
  }
  return r;
}

CheckReport check_tprime_positivity(int n, std::span<const Rational> z) {
  CheckReport r("tprime-positivity", n);
  nlohmann::json zs = nlohmann::json::array();
  for (const auto& x : z) zs.push_back(x.get_str());
  r.params = {{"z", zs}};
  const auto ops = tprime_factors(n, z);
  for (const auto& op : ops) {
    const GeneratorWeights g = weights(op);
    if (sgn(g.identity) < 0 || sgn(g.f) < 0 || sgn(g.e) < 0) {
      r.fail("Rcheck weight negative at site " + site_label(op.site));
      return r;
    }
  }
  for (const auto& pi : enumerate_patterns(n)) {
    ++r.cases;
    const auto out = tprime_apply(n, z, RationalVector::basis(pi));
    for (const auto& [sigma, c] : out.entries()) {
      if (sgn(c) < 0) {
        r.fail("negative entry at " + sigma.to_string() + " from " + pi.to_string());
        return r;
      }
    }
  }
  return r;
}

}  // namespace crossloop
