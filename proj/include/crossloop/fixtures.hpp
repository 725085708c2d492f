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

#ifndef CROSSLOOP_FIXTURES_HPP_
#define CROSSLOOP_FIXTURES_HPP_

#include <filesystem>

#include "crossloop/degrees.hpp"
#include "crossloop/groundstate.hpp"
#include "crossloop/report.hpp"
#include "json.hpp"

namespace crossloop {

// Shipped fixture directory, overridable by CROSSLOOP_FIXTURE_DIR.
std::filesystem::path default_fixture_dir();
nlohmann::json load_fixture(const std::filesystem::path& dir, const std::string& name);

// Psi_2 entries against psi2_entries.json, compared as canonical JSON.
CheckReport check_psi2_entries(const GroundState& gs, const nlohmann::json& fixture);
// Replays every printed word, evaluates the Theta words and the Delta
// identities from Psi_{pi_0}, and compares with the built Psi_3.
CheckReport check_theta_words(const GroundState& gs, const nlohmann::json& fixture);
// n = 3: label by label. n = 4: as a multiset, the displays carry no
// pattern data.
CheckReport check_bidegree_table(const std::map<LinkPattern, Poly>& bidegrees, int n,
                             const nlohmann::json& fixture, const std::string& route);

std::map<LinkPattern, Poly> bidegrees_from_delta(const DeltaFamily& family);
std::map<LinkPattern, Poly> bidegrees_from_schubert(const SchubertFamily& family);
// Sum of the bidegrees against (A+B)^{n(n-1)}.
CheckReport check_bidegree_sum(const std::map<LinkPattern, Poly>& bidegrees, int n);

}  // namespace crossloop

#endif  // CROSSLOOP_FIXTURES_HPP_
