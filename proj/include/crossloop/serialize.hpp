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

#ifndef CROSSLOOP_SERIALIZE_HPP_
#define CROSSLOOP_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "crossloop/groundstate.hpp"
#include "crossloop/link_pattern.hpp"
#include "crossloop/poly.hpp"
#include "json.hpp"

namespace crossloop {

// {"vars": [...], "terms": [[[e0, e1, ...], "c"], ...]} with terms in
// ascending lexicographic monomial order.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

// "(1 4)(2 3)"
std::string pattern_label(const LinkPattern& pi);
LinkPattern parse_pattern(const std::string& text);
// One-line permutation, e.g. "2 1 3".
std::string permutation_label(const std::vector<int>& w);

// Entries in enumeration order with their Theta words (1-based, in
// application order).
nlohmann::json ground_state_to_json(const GroundState& gs);
GroundState ground_state_from_json(const nlohmann::json& j);

}  // namespace crossloop

#endif  // CROSSLOOP_SERIALIZE_HPP_
