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

#ifndef CROSSLOOP_CLI_HPP_
#define CROSSLOOP_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "crossloop/groundstate.hpp"
#include "crossloop/report.hpp"

namespace crossloop {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct RunConfig {
  std::string command;  // gen, check, degrees, numbers, fixtures
  int n = 0;
  int n_max = 0;
  std::filesystem::path run_dir = "run";
  std::filesystem::path fixture_dir;  // empty: shipped fixtures
  // Shifts every rational point family.
  long point_offset = 0;
  std::uint64_t seed = 20260101;
  bool full_n4 = false;
  std::vector<std::string> suites;  // empty or "all": every suite
  std::string format = "csv";       // numbers only: csv or json
};

// Suites of `check`, in execution order. The ground-state suites need the
// full build; the rest do not.
const std::vector<std::string>& check_suite_names();

struct SuiteInputs {
  int n = 0;
  const GroundState* gs = nullptr;    // may be null beyond the build limit
  const GroundState* prev = nullptr;  // size n-1, for the recursion suite
  Rational offset = 0;
  std::uint64_t seed = 0;
  int random_points = 100;  // Pfaffian sum
  int pair_points = 50;     // Yang-Baxter and unitarity
  int tprime_points = 5;
};
std::vector<CheckReport> run_suite(const std::string& name, const SuiteInputs& in);

// Deterministic rationals a/b with |a| <= 24 and 1 <= b <= 17.
std::vector<Rational> random_rationals(std::size_t count, std::uint64_t seed);

// Largest n built without the gated flag.
inline constexpr int kDefaultBuildLimit = 3;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace crossloop

#endif  // CROSSLOOP_CLI_HPP_
