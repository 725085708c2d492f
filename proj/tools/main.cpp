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

#include <iostream>

#include "CLI11.hpp"
#include "crossloop/cli.hpp"

int main(int argc, char** argv) {
  crossloop::RunConfig config;
  CLI::App app{"crossloop: exact ground state of the crossing O(1) loop model"};
  app.require_subcommand(1, 1);
  app.add_option("--run-dir", config.run_dir, "Directory for all artifacts")->capture_default_str();
  app.add_option("--fixtures", config.fixture_dir, "Fixture directory");
  app.add_option("--point-offset", config.point_offset, "Offset of rational point families");
  app.add_option("--seed", config.seed, "Seed for random point families")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Build Psi_n and write psi-n.json");
  gen->add_option("--n", config.n, "Size")->required();
  gen->add_flag("--full-n4", config.full_n4, "Allow the n = 4 build");

  auto* check = app.add_subcommand("check", "Run verification suites");
  check->add_option("--n", config.n, "Size")->required();
  check->add_option("--suite", config.suites, "Suite names or all");
  check->add_flag("--full-n4", config.full_n4, "Allow the n = 4 build");

  auto* degrees = app.add_subcommand("degrees", "Multidegree, bidegree, s and refined tables");
  degrees->add_option("--n", config.n, "Size")->required();
  degrees->add_flag("--full-n4", config.full_n4, "Allow the n = 4 build");

  auto* numbers = app.add_subcommand("numbers", "Determinant, Pfaffian and path counts");
  numbers->add_option("--n-max", config.n_max, "Largest size")->required();
  numbers->add_option("--format", config.format, "csv or json")->capture_default_str();

  auto* fixtures = app.add_subcommand("fixtures", "Diff against the shipped fixtures");
  fixtures->add_option("--n", config.n, "Size (2, 3 or 4)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : crossloop::kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();
  return crossloop::run(config, std::cout, std::cerr);
}
