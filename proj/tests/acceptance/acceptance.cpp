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

// One PASS/FAIL/SKIP line per acceptance criterion. Exit status is nonzero
// iff some enabled criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "crossloop/brauer.hpp"
#include "crossloop/cli.hpp"
#include "crossloop/degrees.hpp"
#include "crossloop/fixtures.hpp"
#include "crossloop/groundstate.hpp"
#include "crossloop/serialize.hpp"
#include "crossloop/stream.hpp"
#include "crossloop/sumrules.hpp"

using namespace crossloop;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
  void require(const CheckReport& r) {
    require(!r.hard_failure(), r.check + " n=" + std::to_string(r.n) + ": " +
                                   r.witness.value_or("failed"));
  }
};

struct Builds {
  std::optional<GroundState> s[4];
  std::optional<BuildReport> report[4];
  double seconds[4] = {};

  const GroundState& at(int n) {
    if (!s[n]) {
      const auto start = Clock::now();
      auto [gs, rep] = build(n);
      seconds[n] = seconds_since(start);
      s[n] = std::move(gs);
      report[n] = std::move(rep);
    }
    return *s[n];
  }
};

const std::vector<std::string> kSequence = {"1", "7", "307", "82977", "137460201",
                                            "1392263902567"};

Outcome criterion1(Builds& b) {
  Outcome o;
  const auto start = Clock::now();
  const GroundState& gs = b.at(2);
  const auto fixture = load_fixture(default_fixture_dir(), "psi2_entries.json");
  o.require(check_psi2_entries(gs, fixture));
  // Byte-identical canonical serialization.
  const std::string once = ground_state_to_json(gs).dump();
  o.require(ground_state_to_json(ground_state_from_json(nlohmann::json::parse(once))).dump() == once,
            "serialization is not canonical");
  const double s = seconds_since(start);
  o.require(s < 1.0, "runtime " + std::to_string(s) + " s");
  return o;
}

Outcome criterion2(Builds& b) {
  Outcome o;
  const auto start = Clock::now();
  const GroundState& gs = b.at(3);
  const BuildReport& rep = *b.report[3];
  o.require(gs.entries.size() == 15 && gs.words.size() == 15, "patterns not all reached");
  for (const auto& c : rep.checks) o.require(c);
  for (const auto& [pi, w] : gs.words) o.require(replay(w, 3) == pi, "replay " + pi.to_string());
  o.require(check_theta_words(gs, load_fixture(default_fixture_dir(), "psi3_words.json")));
  const double s = seconds_since(start);
  o.require(s < 10.0, "runtime " + std::to_string(s) + " s");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("build ") +
              std::to_string(b.seconds[3]) + " s";
  return o;
}

Outcome criterion3(Builds& b) {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const HomogeneousNumber h = homogeneous_number(n);
    o.require(h.determinant.get_str() == kSequence[n - 1], "determinant at n=" + std::to_string(n));
    o.require(h.pfaffian.get_str() == kSequence[n - 1], "Pfaffian at n=" + std::to_string(n));
    if (n <= 4) {
      o.require(lgv_count(n).get_str() == kSequence[n - 1], "path count at n=" + std::to_string(n));
    }
  }
  for (int n = 1; n <= 3; ++n) {
    Integer sum = 0;
    for (const auto& [pi, v] : homogeneous(b.at(n))) sum += v;
    o.require(sum.get_str() == kSequence[n - 1], "build sum at n=" + std::to_string(n));
  }
  return o;
}

Outcome criterion4(Builds& b) {
  Outcome o;
  const auto start = Clock::now();
  for (int n = 1; n <= 3; ++n) o.require(perm_sum_check(b.at(n)));
  for (int n = 1; n <= 4; ++n) o.require(check_delta_sum(build_delta_recursive(n)));
  const double s = seconds_since(start);
  o.require(s < 60.0, "runtime " + std::to_string(s) + " s");
  return o;
}

Outcome criterion5(Builds& b) {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const auto pts = certification_points(n, 100, 20260101 + n);
    o.require(pts.random.size() == 100, "random point count");
    o.require(pts.sweeps.size() ==
                  static_cast<std::size_t>((2 * n + 1) * (2 * n * (n - 1) + 1)),
              "sweep point count");
    std::vector<RationalPoint> all(pts.sweeps);
    all.insert(all.end(), pts.random.begin(), pts.random.end());
    o.require(full_sum_check(b.at(n), all));
    for (std::size_t k = 0; k < pts.random.size(); k += 10) {
      o.require(pfaffian_side(pts.random[k]) == matching_side(pts.random[k]),
                "Pfaffian against matching expansion");
    }
  }
  return o;
}

Outcome criterion6(Builds& b) {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    for (int site = 0; site < 2 * n; ++site) o.require(recursion_check(b.at(n), b.at(n - 1), site));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto start = Clock::now();
  const auto fixture = load_fixture(default_fixture_dir(), "bidegrees.json");
  for (int n = 3; n <= 4; ++n) {
    const auto from_delta = bidegrees_from_delta(build_delta_recursive(n));
    const auto from_s = bidegrees_from_schubert(schubert_family_recursive(n));
    o.require(check_bidegree_table(from_delta, n, fixture, "delta"));
    o.require(check_bidegree_table(from_s, n, fixture, "schubert"));
    o.require(check_bidegree_sum(from_delta, n));
    o.require(check_bidegree_sum(from_s, n));
  }
  const double s = seconds_since(start);
  o.require(s < 60.0, "runtime " + std::to_string(s) + " s");
  return o;
}

Outcome criterion8(Builds& b) {
  Outcome o;
  for (int n = 1; n <= 3; ++n) o.require(check_brauer_relations(n));
  SuiteInputs in;
  in.n = 3;
  in.seed = 8;
  in.pair_points = 50;
  for (const auto& r : run_suite("brauer", in)) o.require(r);
  for (int n = 1; n <= 3; ++n) {
    const GroundState& gs = b.at(n);
    o.require(check_theta_involution(gs));
    o.require(check_delta_idempotence(gs));
    o.require(check_leading_terms(gs));
    o.require(check_vanishing(gs));
    const auto pts = seed_points(2 * n, n <= 2 ? 20 : 5, 0);
    o.require(check_tprime_eigenvector(gs, pts));
  }
  o.require(check_phi(3));
  const VarNames t = {"t"};
  o.require(refined_polys(b.at(2)).total.with_vars(t) == parse_poly("1+5*t+t^2", t), "P_2");
  o.require(refined_polys(b.at(3)).total.with_vars(t) ==
                parse_poly("7+63*t+167*t^2+63*t^3+7*t^4", t),
            "P_3");
  return o;
}

std::optional<Outcome> criterion9() {
  const char* flag = std::getenv("CROSSLOOP_FULL_N4");
  if (!flag || std::string(flag) != "1") return std::nullopt;
  Outcome o;
  const StreamSummary s = stream_summary(4);
  o.require(s.entries == 105, "entries " + std::to_string(s.entries));
  o.require(s.homogeneous_sum == 82977, "homogeneous sum " + s.homogeneous_sum.get_str());
  o.require(s.perm_sum_holds, "permutation-sector sum differs from the product");
  const VarNames t = {"t"};
  o.require(s.refined_total.with_vars(t) ==
                parse_poly("307+3991*t+18899*t^2+36583*t^3+18899*t^4+3991*t^5+307*t^6", t),
            "P_4 = " + s.refined_total.to_string());
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("largest entry ") +
              std::to_string(s.max_terms) + " terms";
  return o;
}

}  // namespace

int main() {
  Builds builds;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Psi_2 reproduces the three listed entries", [&] { return criterion1(builds); }},
      {"n=3 Theta words reach all 15 patterns, table replays", [&] { return criterion2(builds); }},
      {"1, 7, 307, 82977, 137460201, 1392263902567 by det, Pf, paths, builds",
       [&] { return criterion3(builds); }},
      {"permutation-sector sums symbolic (Psi n<=3, delta n<=4)",
       [&] { return criterion4(builds); }},
      {"Pfaffian sum checked on axis lines and random points n<=3",
       [&] { return criterion5(builds); }},
      {"recursion 2->1 and 3->2 at every site", [&] { return criterion6(builds); }},
      {"bidegree tables n=3,4 by delta and s routes", [] { return criterion7(); }},
      {"property suites", [&] { return criterion8(builds); }},
  };
  bool ok = true;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    ok = ok && o.pass;
    std::ostringstream line;
    line << "CRITERION " << index++ << " " << (o.pass ? "PASS" : "FAIL") << " " << name << " ("
         << seconds_since(start) << " s)";
    if (!o.detail.empty()) line << " [" << o.detail << "]";
    std::cout << line.str() << std::endl;
  }
  const auto start = Clock::now();
  std::optional<Outcome> nine;
  try {
    nine = criterion9();
  } catch (const std::exception& e) {
    nine = Outcome{false, std::string("exception: ") + e.what()};
  }
  if (!nine) {
    std::cout << "CRITERION 9 SKIP full n=4 build (set CROSSLOOP_FULL_N4=1)" << std::endl;
  } else {
    ok = ok && nine->pass;
    std::cout << "CRITERION 9 " << (nine->pass ? "PASS" : "FAIL") << " full n=4 build, sums and P_4 ("
              << seconds_since(start) << " s)"
              << (nine->detail.empty() ? "" : " [" + nine->detail + "]") << std::endl;
  }
  return ok ? 0 : 1;
}
