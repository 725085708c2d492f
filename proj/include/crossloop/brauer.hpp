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

#ifndef CROSSLOOP_BRAUER_HPP_
#define CROSSLOOP_BRAUER_HPP_

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "crossloop/link_pattern.hpp"
#include "crossloop/poly.hpp"
#include "crossloop/report.hpp"

namespace crossloop {

class SingularNormalization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector on the pattern basis of CP_n. Missing keys are zero entries.
template <typename Scalar>
class PatternVector {
 public:
  PatternVector() = default;
  explicit PatternVector(int n) : n_(n) {}

  static PatternVector basis(const LinkPattern& pi) {
    PatternVector v(pi.size());
    v.entries_.emplace(pi, Scalar(1));
    return v;
  }

  int n() const { return n_; }
  const std::map<LinkPattern, Scalar>& entries() const { return entries_; }

  Scalar get(const LinkPattern& pi) const {
    auto it = entries_.find(pi);
    return it == entries_.end() ? Scalar() : it->second;
  }
  void set(const LinkPattern& pi, Scalar c) { entries_[pi] = std::move(c); }
  void add(const LinkPattern& pi, const Scalar& c) {
    auto [it, inserted] = entries_.try_emplace(pi, c);
    if (!inserted) it->second += c;
  }

  PatternVector& operator+=(const PatternVector& o) {
    for (const auto& [pi, c] : o.entries_) add(pi, c);
    return *this;
  }
  PatternVector operator*(const Rational& s) const {
    PatternVector r(n_);
    for (const auto& [pi, c] : entries_) r.entries_.emplace(pi, c * s);
    return r;
  }

  // Equality up to explicitly stored zeros.
  bool operator==(const PatternVector& o) const {
    auto is_zero = [](const Scalar& c) { return c == Scalar(); };
    for (const auto& [pi, c] : entries_) {
      if (!(c == o.get(pi))) return false;
    }
    for (const auto& [pi, c] : o.entries_) {
      if (!entries_.contains(pi) && !is_zero(c)) return false;
    }
    return true;
  }

 private:
  int n_ = 0;
  std::map<LinkPattern, Scalar> entries_;
};

using RationalVector = PatternVector<Rational>;

// One generator-level operator acting on pattern space.
struct OperatorSpec {
  enum class Kind { kIdentity, kE, kF, kX, kRcheck };
  Kind kind = Kind::kIdentity;
  int site = 0;
  Rational u;     // X(u)
  Rational z, w;  // Rcheck(z, w)

  static OperatorSpec identity() { return {}; }
  static OperatorSpec e(int site) { return {Kind::kE, site, 0, 0, 0}; }
  static OperatorSpec f(int site) { return {Kind::kF, site, 0, 0, 0}; }
  // (1-u) I + (u/2)(1-u) f + u e
  static OperatorSpec x(int site, Rational u) { return {Kind::kX, site, u, 0, 0}; }
  // X(w - z) / ((1 - (w-z)/2)(1 + w - z))
  static OperatorSpec rcheck(int site, Rational z, Rational w) {
    return {Kind::kRcheck, site, 0, z, w};
  }
};

// Weights (identity, f, e) of an operator; throws SingularNormalization.
struct GeneratorWeights {
  Rational identity, f, e;
};
GeneratorWeights weights(const OperatorSpec& op);

template <typename Scalar>
PatternVector<Scalar> apply(const OperatorSpec& op, const PatternVector<Scalar>& v);

// Applies ops.back() first, i.e. computes ops[0] * ops[1] * ... * v.
template <typename Scalar>
PatternVector<Scalar> apply_product(std::span<const OperatorSpec> ops,
                                    const PatternVector<Scalar>& v);

Rational dot(const RationalVector& form, const RationalVector& v);
// Row vector form * op.
RationalVector pullback(const OperatorSpec& op, const RationalVector& form);

// v_n: all ones.
RationalVector all_ones_form(int n);
// b_n: indicator of the permutation sector.
RationalVector permutation_sector_form(int n);

// Relabels every pattern key by rotate(pi, times).
RationalVector rotate_vector(const RationalVector& v, int times);

// Factors of prod_{i=1..n} prod_{j=1..n} Rcheck_{i+2j-2}(z_{2j-1},
// z_{2i+2j-2}) written left to right (indices mod 2n). The rightmost factor
// acts first.
std::vector<OperatorSpec> tprime_factors(int n, std::span<const Rational> z);
// The Rcheck product carries Psi(z_{n+1}, ..., z_{2n}, z_1, ..., z_n) to
// Psi(z), so the operator with eigenvector Psi(z) is the product composed
// with the half-turn rotation of patterns: T' v = prod * rotate_vector(v, n).
RationalVector tprime_apply(int n, std::span<const Rational> z,
                            const RationalVector& v);

CheckReport check_brauer_relations(int n);
// Yang-Baxter at every site and unitarity X(u)X(-u) = (1-u^2)(1-u^2/4).
CheckReport check_yang_baxter(int n, const Rational& u, const Rational& v);
// Rcheck(z,w) Rcheck(w,z) = I on every basis vector.
CheckReport check_rcheck_unitarity(int n, int site, const Rational& z,
                                   const Rational& w);
// v_n Rcheck_i(z,w) = v_n.
CheckReport check_vn_invariance(int n, int site, const Rational& z,
                                const Rational& w);
// b_n Rcheck_i(z,w) = (1+(w-z)/2)(1+z-w)/((1-(w-z)/2)(1+w-z)) b_n, i != n, 2n.
CheckReport check_bn_relation(int n, int site, const Rational& z,
                              const Rational& w);
// T' maps vectors with nonnegative entries to vectors with nonnegative
// entries when every Rcheck weight is nonnegative.
CheckReport check_tprime_positivity(int n, std::span<const Rational> z);

}  // namespace crossloop

#endif  // CROSSLOOP_BRAUER_HPP_
