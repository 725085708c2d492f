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

#ifndef CROSSLOOP_TESTS_UNIT_SHARED_HPP_
#define CROSSLOOP_TESTS_UNIT_SHARED_HPP_

#include <string>

#include "crossloop/groundstate.hpp"
#include "crossloop/link_pattern.hpp"
#include "crossloop/poly_ops.hpp"
#include "crossloop/serialize.hpp"

namespace crossloop::testing {

// Built once per process.
inline const GroundState& state(int n) {
  static const GroundState s1 = build(1).first;
  static const GroundState s2 = build(2).first;
  if (n == 1) return s1;
  if (n == 2) return s2;
  static const GroundState s3 = build(3).first;
  return s3;
}

inline LinkPattern pat(const std::string& s) { return parse_pattern(s); }

inline Poly zpoly(const std::string& s, int n) { return parse_poly(s, z_vars(n)); }

}  // namespace crossloop::testing

#endif  // CROSSLOOP_TESTS_UNIT_SHARED_HPP_
