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

#ifndef CROSSLOOP_STREAM_HPP_
#define CROSSLOOP_STREAM_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "crossloop/link_pattern.hpp"
#include "crossloop/poly.hpp"

namespace crossloop {

// Integer polynomial in at most 8 variables. The exponent of slot k sits in
// byte 7-k of the packed monomial, so integer order is lexicographic order.
// Coefficient overflow throws std::overflow_error.
class PackedPoly {
 public:
  static constexpr int kSlots = 8;
  struct Term {
    std::uint64_t mono;
    std::int64_t coef;
  };

  PackedPoly() = default;
  // Sorts and combines.
  explicit PackedPoly(std::vector<Term> terms);

  static PackedPoly constant(std::int64_t c);
  static std::uint64_t unit(int slot) { return std::uint64_t{1} << (8 * (kSlots - 1 - slot)); }
  static int exponent(std::uint64_t mono, int slot) {
    return static_cast<int>((mono >> (8 * (kSlots - 1 - slot))) & 0xff);
  }
  static int degree(std::uint64_t mono);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  std::int64_t constant_term() const;

  PackedPoly operator+(const PackedPoly& o) const;
  PackedPoly operator-(const PackedPoly& o) const;
  PackedPoly scaled(std::int64_t c) const;
  // Times c0 + sum_k c_k x_{slot_k}.
  PackedPoly times_affine(std::int64_t c0, const std::vector<std::pair<int, std::int64_t>>& lin) const;
  PackedPoly swap_vars(int i, int j) const;
  // (F^tau - F) / (x_i - x_j)
  PackedPoly divided_difference(int i, int j) const;
  // Exact quotient by 1 - x_i + x_j. Throws NotDivisible.
  PackedPoly div_one_minus(int i, int j) const;

  bool operator==(const PackedPoly& o) const;

 private:
  static PackedPoly sorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

PackedPoly to_packed(const Poly& p);
Poly to_poly(const PackedPoly& p, const VarNames& vars);

PackedPoly packed_psi_pi0(int n);
// Same operator as theta_apply.
PackedPoly packed_theta(const PackedPoly& f, int site, int points);

// Depth-first over the Theta tree; only the current root-to-node path is
// held in memory. `visit` sees every pattern exactly once, in tree order.
void stream_build(int n, const std::function<void(const LinkPattern&, const PackedPoly&)>& visit);

struct StreamSummary {
  int n = 0;
  std::size_t entries = 0;
  std::size_t max_terms = 0;
  std::map<LinkPattern, Integer> homogeneous;
  Integer homogeneous_sum = 0;
  bool perm_sum_holds = false;
  // Sum of refined entries, in t.
  Poly refined_total;
};
StreamSummary stream_summary(int n);

}  // namespace crossloop

#endif  // CROSSLOOP_STREAM_HPP_
