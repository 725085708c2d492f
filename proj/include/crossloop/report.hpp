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

#ifndef CROSSLOOP_REPORT_HPP_
#define CROSSLOOP_REPORT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace crossloop {

// Outcome of one verification. Observations (conjecture-status checks) are
// reported but never count as failures.
struct CheckReport {
  std::string check;
  int n = 0;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  bool observation = false;
  std::size_t cases = 0;
  std::optional<std::string> witness;

  CheckReport() = default;
  CheckReport(std::string name, int size) : check(std::move(name)), n(size) {}

  // Records the first failure only.
  void fail(std::string what) {
    if (pass) witness = std::move(what);
    pass = false;
  }
  bool hard_failure() const { return !pass && !observation; }

  nlohmann::json to_json() const {
    nlohmann::json j{{"check", check}, {"n", n}, {"params", params},
                     {"pass", pass}, {"cases", cases}};
    if (observation) j["status"] = "CONJECTURE";
    if (witness) j["witness"] = *witness;
    return j;
  }
};

inline bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (r.hard_failure()) return false;
  }
  return true;
}

}  // namespace crossloop

#endif  // CROSSLOOP_REPORT_HPP_
