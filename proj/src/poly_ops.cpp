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

#include "crossloop/poly_ops.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace crossloop {

Poly divided_difference(const Poly& p, int i, int j, DividedDifference sign) {
  if (i == j) throw std::invalid_argument("divided_difference: i == j");
  // x_i^a x_j^b -> sign(b - a) x_i^min x_j^min h_{|a-b|-1}(x_i, x_j), the
  // quotient of the swapped-first difference by (x_i - x_j).
  const bool classical = sign == DividedDifference::kClassical;
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    const int a = m[i], b = m[j];
    if (a == b) continue;
    const int low = std::min(a, b), gap = std::abs(a - b);
    const Rational coef = (b > a) != classical ? c : Rational(-c);
    for (int k = 0; k < gap; ++k) {
      Monomial r = m;
      r.set(i, low + k);
      r.set(j, low + gap - 1 - k);
      terms.emplace_back(r, coef);
    }
  }
  return Poly(p.vars(), std::move(terms));
}

namespace {

// ell = c0 + L with c0 != 0: the quotient q satisfies c0 q_k = p_k - L q_{k-1}
// degree by degree, and exactness means the step past deg p vanishes.
Poly divide_graded(const Poly& p, const Poly& ell, const Rational& c0) {
  const Poly lin = ell - Poly::constant(ell.vars(), c0);
  const Rational inv = 1 / c0;
  const int top = p.total_degree();
  std::vector<std::vector<Poly::Term>> parts(top + 1);
  for (const auto& t : p.terms()) parts[t.first.degree()].push_back(t);
  const VarNames& vars = p.num_vars() >= ell.num_vars() ? p.vars() : ell.vars();
  Poly prev(vars);
  std::vector<Poly::Term> out;
  for (int k = 0; k <= top; ++k) {
    Poly qk = (Poly(vars, std::move(parts[k])) - lin * prev) * inv;
    if (k == top) {
      if (!qk.is_zero()) throw NotDivisible("exact_div_linear: nonzero remainder");
      break;
    }
    out.insert(out.end(), qk.terms().begin(), qk.terms().end());
    prev = std::move(qk);
  }
  return Poly(vars, std::move(out));
}

}  // namespace

Poly exact_div_linear(const Poly& p, const Poly& ell) {
  const int deg = ell.total_degree();
  if (deg < 0) throw std::invalid_argument("exact_div_linear: division by zero");
  if (deg == 0) return p * Rational(1 / ell.terms().front().second);
  if (deg != 1) throw std::invalid_argument("exact_div_linear: divisor not affine");
  if (p.is_zero()) return p;

  const Rational c0 = ell.coefficient(Monomial());
  if (sgn(c0) != 0) return divide_graded(p, ell, c0);

  // Pick the pivot variable x and write ell = c*x + r.
  int x = -1;
  Rational c;
  for (const auto& [m, coef] : ell.terms()) {
    if (m.degree() != 1) continue;
    for (int k = 0; k < kMaxVars; ++k) {
      if (m[k] == 1) {
        x = k;
        c = coef;
        break;
      }
    }
    break;
  }
  Poly r = ell - Poly::variable(ell.vars(), x) * c;
  const Rational inv_c = 1 / c;

  // Synthetic division in x, highest power first.
  std::vector<Poly> a = p.coefficients_in(x);
  const int d = static_cast<int>(a.size()) - 1;
  if (d == 0) throw NotDivisible("exact_div_linear: nonzero remainder");
  std::vector<Poly> b(d);
  b[d - 1] = a[d] * inv_c;
  for (int k = d - 1; k >= 1; --k) b[k - 1] = (a[k] - r * b[k]) * inv_c;
  if (!(a[0] - r * b[0]).is_zero()) {
    throw NotDivisible("exact_div_linear: nonzero remainder");
  }

  std::vector<Poly::Term> terms;
  for (int k = 0; k < d; ++k) {
    for (const auto& [m, coef] : b[k].terms()) {
      Monomial mm = m;
      mm.set(x, k);
      terms.emplace_back(mm, coef);
    }
  }
  return Poly(p.num_vars() >= ell.num_vars() ? p.vars() : ell.vars(),
              std::move(terms));
}

Poly exact_div_linear(const Poly& p, std::span<const Poly> factors) {
  Poly q = p;
  for (const auto& f : factors) q = exact_div_linear(q, f);
  return q;
}

Poly exact_div(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  const auto& [lead_m, lead_c] = d.terms().back();
  const Rational inv = 1 / lead_c;
  Poly r = p;
  std::vector<Poly::Term> quotient;
  while (!r.is_zero()) {
    const auto& [m, c] = r.terms().back();
    std::array<int, kMaxVars> e{};
    for (int k = 0; k < kMaxVars; ++k) {
      e[k] = m[k] - lead_m[k];
      if (e[k] < 0) throw NotDivisible("exact_div: nonzero remainder");
    }
    Poly::Term t{Monomial(e), c * inv};
    quotient.push_back(t);
    r -= Poly(r.vars(), {t}) * d;
  }
  return Poly(p.num_vars() >= d.num_vars() ? p.vars() : d.vars(),
              std::move(quotient));
}

bool divides_linear(const Poly& ell, const Poly& p) {
  try {
    exact_div_linear(p, ell);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

Rational evaluate(const Poly& p, std::span<const Rational> point) {
  const int nv = p.num_vars();
  if (static_cast<int>(point.size()) < nv) {
    throw std::invalid_argument("evaluate: point dimension mismatch");
  }
  std::vector<std::vector<Rational>> powers(nv);
  for (int k = 0; k < nv; ++k) {
    const int dk = std::max(p.degree_in(k), 0);
    powers[k].resize(dk + 1);
    powers[k][0] = 1;
    for (int e = 1; e <= dk; ++e) powers[k][e] = powers[k][e - 1] * point[k];
  }
  Rational sum = 0;
  Rational term;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (int k = 0; k < nv; ++k) {
      if (m[k] != 0) term *= powers[k][m[k]];
    }
    sum += term;
  }
  return sum;
}

Poly substitute(const Poly& p, int slot, const Poly& value) {
  std::vector<Poly> a = p.coefficients_in(slot);
  Poly result = a.back();
  for (int k = static_cast<int>(a.size()) - 2; k >= 0; --k) {
    result = result * value + a[k];
  }
  return result;
}

FractionResult substitute_linear_fraction(const Poly& p, int slot,
                                          const Mobius& map, int new_slot) {
  if (new_slot != slot && p.degree_in(new_slot) > 0) {
    throw std::invalid_argument(
        "substitute_linear_fraction: target variable already in use");
  }
  const VarNames& vars = p.vars();
  std::pair<int, Rational> num_c[] = {{new_slot, map.a}};
  const Poly numer = Poly::affine(vars, map.b, num_c);
  if (sgn(map.c) == 0) {
    if (sgn(map.d) == 0) {
      throw std::invalid_argument("substitute_linear_fraction: singular map");
    }
    return {substitute(p, slot, numer * Rational(1 / map.d)), 0};
  }
  if (map.a * map.d - map.b * map.c == 0) {
    throw std::invalid_argument("substitute_linear_fraction: singular map");
  }
  std::pair<int, Rational> den_c[] = {{new_slot, map.c}};
  const Poly denom = Poly::affine(vars, map.d, den_c);

  std::vector<Poly> a = p.coefficients_in(slot);
  const int e = static_cast<int>(a.size()) - 1;
  if (p.is_zero()) return {p, 0};
  // sum_k a_k numer^k denom^(e-k)
  std::vector<Poly> denom_pow(e + 1);
  denom_pow[0] = Poly::constant(vars, 1);
  for (int k = 1; k <= e; ++k) denom_pow[k] = denom_pow[k - 1] * denom;
  Poly result(vars);
  Poly numer_pow = Poly::constant(vars, 1);
  for (int k = 0; k <= e; ++k) {
    if (!a[k].is_zero()) result += a[k] * numer_pow * denom_pow[e - k];
    numer_pow *= numer;
  }
  return {result, e};
}

Poly homogenize(const Poly& p, int s_slot, int h_slot, int degree) {
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    if (m[h_slot] != 0) {
      throw std::invalid_argument("homogenize: homogenizing slot in use");
    }
    if (m[s_slot] > degree) throw std::domain_error("homogenize: degree exceeded");
    Monomial r = m;
    r.set(h_slot, degree - m[s_slot]);
    terms.emplace_back(r, c);
  }
  return Poly(p.vars(), std::move(terms));
}

Poly shifted_difference(const VarNames& vars, int i, int j) {
  std::pair<int, Rational> c[] = {{i, Rational(1)}, {j, Rational(-1)}};
  return Poly::affine(vars, 1, c);
}

Poly product_of_shifted_differences(const VarNames& vars,
                                    std::span<const std::pair<int, int>> pairs) {
  Poly r = Poly::constant(vars, 1);
  for (const auto& [i, j] : pairs) r *= shifted_difference(vars, i, j);
  return r;
}

Poly vandermonde(const VarNames& vars, std::span<const int> slots) {
  Poly r = Poly::constant(vars, 1);
  for (std::size_t a = 0; a < slots.size(); ++a) {
    for (std::size_t b = a + 1; b < slots.size(); ++b) {
      std::pair<int, Rational> c[] = {{slots[a], Rational(1)},
                                      {slots[b], Rational(-1)}};
      r *= Poly::affine(vars, 0, c);
    }
  }
  return r;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const VarNames& vars) : s_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse_poly: " + what + " at offset " +
                                std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_factor() {
    char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        acc *= unary();
      } else if (starts_factor()) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(vars_, Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = s_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail("unknown variable '" + name + "'");
      return Poly::variable(vars_, static_cast<int>(it - vars_.begin()));
    }
    fail("unexpected character");
  }

  const std::string& s_;
  const VarNames& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const VarNames& vars) {
  return Parser(text, vars).parse();
}

}  // namespace crossloop
