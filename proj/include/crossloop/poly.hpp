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

#ifndef CROSSLOOP_POLY_HPP_
#define CROSSLOOP_POLY_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace crossloop {

using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms. mpq_class(num, den) does not reduce.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Upper bound on the number of variable slots of a single polynomial.
inline constexpr int kMaxVars = 16;

class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponent vector over a fixed number of slots. Unused slots are zero, so two
// monomials over universes of different sizes compare equal iff they agree
// after zero padding.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  explicit Monomial(std::span<const int> exps);

  int operator[](int slot) const { return exps_[slot]; }
  void set(int slot, int e);
  int degree() const;

  Monomial operator*(const Monomial& other) const;

  // Lexicographic on (e_0, e_1, ...).
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

using VarNames = std::vector<std::string>;

// Sparse multivariate polynomial with exact rational coefficients.
//
// Terms are kept sorted by monomial (lexicographic, ascending) with no zero
// coefficients, so equality is structural. Binary operations on polynomials
// whose variable lists differ require one list to be a prefix of the other;
// the result lives in the longer universe.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() : vars_(empty_vars()) {}
  explicit Poly(VarNames vars);
  Poly(VarNames vars, std::vector<Term> terms);

  static Poly constant(const VarNames& vars, const Rational& c);
  static Poly variable(const VarNames& vars, int slot);
  // c0 + sum_k c_k * x_{slot_k}
  static Poly affine(const VarNames& vars, const Rational& c0,
                     std::span<const std::pair<int, Rational>> coeffs);
  static Poly affine(const VarNames& vars, const Rational& c0,
                     std::initializer_list<std::pair<int, Rational>> coeffs) {
    return affine(vars, c0, std::span(coeffs.begin(), coeffs.size()));
  }

  const VarNames& vars() const { return *vars_; }
  int num_vars() const { return static_cast<int>(vars_->size()); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int slot) const;
  // Homogeneous component of total degree d.
  Poly homogeneous_part(int d) const;
  Rational coefficient(const Monomial& m) const;
  bool has_integer_coefficients() const;
  bool is_constant() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly pow(int k) const;

  bool operator==(const Poly& o) const;

  // Same terms, relabelled universe. `vars` must have at least as many slots
  // as the highest slot in use.
  Poly with_vars(VarNames vars) const;
  // Slot k of the result receives what was in slot map[k-th old slot]:
  // monomial x_k^e becomes x_{map[k]}^e.
  Poly remap(std::span<const int> map, VarNames vars) const;
  Poly remap(std::span<const int> map) const { return remap(map, vars()); }
  // Exchanges slots i and j.
  Poly swap_vars(int i, int j) const;
  // x_slot -> scale * x_slot for every listed slot.
  Poly scale_vars(std::span<const std::pair<int, Rational>> scales) const;

  // Terms grouped by the exponent of `slot`: result[k] is the coefficient of
  // x_slot^k (without x_slot).
  std::vector<Poly> coefficients_in(int slot) const;

  std::string to_string() const;

 private:
  static std::shared_ptr<const VarNames> empty_vars();
  Poly(std::shared_ptr<const VarNames> vars, std::vector<Term> terms)
      : vars_(std::move(vars)), terms_(std::move(terms)) {}
  static std::shared_ptr<const VarNames> join_vars(const Poly& a,
                                                   const Poly& b);
  void canonicalize();

  std::shared_ptr<const VarNames> vars_;
  std::vector<Term> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// Names x1..xk with the given stem, e.g. make_vars("z", 4) = {z1,z2,z3,z4}.
VarNames make_vars(const std::string& stem, int count);

}  // namespace crossloop

#endif  // CROSSLOOP_POLY_HPP_
