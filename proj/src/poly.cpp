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

#include "crossloop/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace crossloop {

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
    throw std::invalid_argument("Monomial: too many variables");
  }
  exps_.fill(0);
  for (std::size_t k = 0; k < exps.size(); ++k) set(static_cast<int>(k), exps[k]);
}

void Monomial::set(int slot, int e) {
  if (slot < 0 || slot >= kMaxVars || e < 0 || e > 255) {
    throw std::out_of_range("Monomial::set: slot or exponent out of range");
  }
  exps_[slot] = static_cast<std::uint8_t>(e);
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int k = 0; k < kMaxVars; ++k) {
    int e = exps_[k] + other.exps_[k];
    if (e > 255) throw std::overflow_error("Monomial: exponent overflow");
    r.exps_[k] = static_cast<std::uint8_t>(e);
  }
  return r;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes.
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::shared_ptr<const VarNames> Poly::empty_vars() {
  static const auto kEmpty = std::make_shared<const VarNames>();
  return kEmpty;
}

Poly::Poly(VarNames vars)
    : vars_(std::make_shared<const VarNames>(std::move(vars))) {
  if (vars_->size() > static_cast<std::size_t>(kMaxVars)) {
    throw std::invalid_argument("Poly: too many variables");
  }
}

Poly::Poly(VarNames vars, std::vector<Term> terms) : Poly(std::move(vars)) {
  terms_ = std::move(terms);
  canonicalize();
}

void Poly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.second) == 0; });
  terms_ = std::move(out);
}

Poly Poly::constant(const VarNames& vars, const Rational& c) {
  Poly p(vars);
  if (sgn(c) != 0) p.terms_.emplace_back(Monomial(), c);
  return p;
}

Poly Poly::variable(const VarNames& vars, int slot) {
  if (slot < 0 || slot >= static_cast<int>(vars.size())) {
    throw std::out_of_range("Poly::variable: bad slot");
  }
  Poly p(vars);
  Monomial m;
  m.set(slot, 1);
  p.terms_.emplace_back(m, Rational(1));
  return p;
}

Poly Poly::affine(const VarNames& vars, const Rational& c0,
                  std::span<const std::pair<int, Rational>> coeffs) {
  std::vector<Term> terms;
  terms.emplace_back(Monomial(), c0);
  for (const auto& [slot, c] : coeffs) {
    if (slot < 0 || slot >= static_cast<int>(vars.size())) {
      throw std::out_of_range("Poly::affine: bad slot");
    }
    Monomial m;
    m.set(slot, 1);
    terms.emplace_back(m, c);
  }
  return Poly(vars, std::move(terms));
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

int Poly::degree_in(int slot) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.first[slot]);
  return d;
}

Poly Poly::homogeneous_part(int d) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.first.degree() == d) out.push_back(t);
  }
  return Poly(vars_, std::move(out));
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

bool Poly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return t.second.get_den() == 1;
  });
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0);
}

std::shared_ptr<const VarNames> Poly::join_vars(const Poly& a, const Poly& b) {
  if (a.vars_ == b.vars_) return a.vars_;
  const VarNames& va = *a.vars_;
  const VarNames& vb = *b.vars_;
  const bool a_longer = va.size() >= vb.size();
  const VarNames& lng = a_longer ? va : vb;
  const VarNames& sht = a_longer ? vb : va;
  if (!std::equal(sht.begin(), sht.end(), lng.begin())) {
    throw std::invalid_argument("Poly: incompatible variable universes");
  }
  return a_longer ? a.vars_ : b.vars_;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

// Merge of two sorted term lists with coefficient sign on the right operand.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b,
                                    bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].second - b[j].second)
                            : Rational(a[i].second + b[j].second);
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  return Poly(join_vars(*this, o), merge_terms(terms_, o.terms_, false));
}

Poly Poly::operator-(const Poly& o) const {
  return Poly(join_vars(*this, o), merge_terms(terms_, o.terms_, true));
}

Poly Poly::operator*(const Poly& o) const {
  auto vars = join_vars(*this, o);
  if (terms_.empty() || o.terms_.empty()) return Poly(vars, {});
  const Poly& big = terms_.size() >= o.terms_.size() ? *this : o;
  const Poly& small = terms_.size() >= o.terms_.size() ? o : *this;
  if (small.terms_.size() <= 8) {
    // Multiplying by a monomial preserves the lexicographic order, so each
    // partial product is already sorted and can be merged in.
    std::vector<Term> acc;
    for (const auto& [sm, sc] : small.terms_) {
      std::vector<Term> part;
      part.reserve(big.terms_.size());
      for (const auto& [bm, bc] : big.terms_) part.emplace_back(bm * sm, bc * sc);
      acc = acc.empty() ? std::move(part) : merge_terms(acc, part, false);
    }
    return Poly(vars, std::move(acc));
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(big.terms_.size() * 4);
  for (const auto& [am, ac] : terms_) {
    for (const auto& [bm, bc] : o.terms_) acc[am * bm] += ac * bc;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.emplace_back(m, std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return Poly(vars, std::move(out));
}

Poly Poly::operator*(const Rational& c) const {
  if (sgn(c) == 0) return Poly(vars_, {});
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly result = constant(vars(), 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  // Universes may differ in length; terms are compared after zero padding.
  return terms_ == o.terms_;
}

Poly Poly::with_vars(VarNames vars) const {
  for (const auto& t : terms_) {
    for (int k = static_cast<int>(vars.size()); k < kMaxVars; ++k) {
      if (t.first[k] != 0) {
        throw std::invalid_argument("Poly::with_vars: universe too small");
      }
    }
  }
  return Poly(std::make_shared<const VarNames>(std::move(vars)), terms_);
}

Poly Poly::remap(std::span<const int> map, VarNames vars) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (int k = 0; k < static_cast<int>(map.size()); ++k) {
      if (m[k] == 0) continue;
      r.set(map[k], r[map[k]] + m[k]);
    }
    out.emplace_back(r, c);
  }
  return Poly(std::move(vars), std::move(out));
}

Poly Poly::swap_vars(int i, int j) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    r.set(i, m[j]);
    r.set(j, m[i]);
    out.emplace_back(r, c);
  }
  Poly p(vars_, std::move(out));
  p.canonicalize();
  return p;
}

Poly Poly::scale_vars(std::span<const std::pair<int, Rational>> scales) const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) {
    for (const auto& [slot, s] : scales) {
      for (int e = 0; e < m[slot]; ++e) c *= s;
    }
  }
  std::erase_if(r.terms_, [](const Term& t) { return sgn(t.second) == 0; });
  return r;
}

std::vector<Poly> Poly::coefficients_in(int slot) const {
  std::vector<std::vector<Term>> buckets(std::max(degree_in(slot), 0) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    r.set(slot, 0);
    buckets[m[slot]].emplace_back(r, c);
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly(vars_, std::move(b)));
  // Lexicographic order restricted to the remaining slots is preserved, but
  // canonicalize anyway since slot may not be the leading one.
  for (auto& p : out) p.canonicalize();
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomials first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1 && m.degree() > 0;
    if (!unit) os << a.get_str();
    bool need_star = !unit;
    for (int k = 0; k < num_vars(); ++k) {
      if (m[k] == 0) continue;
      if (need_star) os << "*";
      os << (*vars_)[k];
      if (m[k] > 1) os << "^" << m[k];
      need_star = true;
    }
  }
  return os.str();
}

VarNames make_vars(const std::string& stem, int count) {
  VarNames v;
  v.reserve(count);
  for (int k = 1; k <= count; ++k) v.push_back(stem + std::to_string(k));
  return v;
}

}  // namespace crossloop
