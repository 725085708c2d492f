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

#include "crossloop/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "crossloop/poly_ops.hpp"
#include "crossloop/serialize.hpp"

#ifndef CROSSLOOP_FIXTURE_DIR
#define CROSSLOOP_FIXTURE_DIR "fixtures"
#endif

namespace crossloop {

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("CROSSLOOP_FIXTURE_DIR"); env && *env) return env;
  return CROSSLOOP_FIXTURE_DIR;
}

nlohmann::json load_fixture(const std::filesystem::path& dir, const std::string& name) {
  std::ifstream in(dir / name);
  if (!in) throw std::runtime_error("cannot open fixture " + (dir / name).string());
  return nlohmann::json::parse(in);
}

CheckReport check_psi2_entries(const GroundState& gs, const nlohmann::json& fixture) {
  CheckReport r("fixture-psi2", gs.n);
  const VarNames vars = fixture.at("vars").get<VarNames>();
  if (gs.n != fixture.at("n").get<int>() || vars != gs.vars) {
    r.fail("fixture is for a different size");
    return r;
  }
  for (const auto& e : fixture.at("entries")) {
    ++r.cases;
    const LinkPattern pi = parse_pattern(e.at("pattern").get<std::string>());
    const Poly want = parse_poly(e.at("poly").get<std::string>(), vars);
    if (!gs.entries.contains(pi)) {
      r.fail("missing entry " + pi.to_string());
    } else if (poly_to_json(gs.at(pi)).dump() != poly_to_json(want).dump()) {
      r.fail("display " + std::to_string(e.at("display").get<int>()) + " differs: " +
             gs.at(pi).to_string());
    }
  }
  if (r.cases != gs.entries.size()) r.fail("entry count differs");
  return r;
}

namespace {

ThetaWord word_of(const nlohmann::json& sites) {
  ThetaWord w;
  for (int s : sites.get<std::vector<int>>()) w.sites.push_back(s - 1);
  return w;
}

Poly apply_word(const Poly& base, const ThetaWord& w, int points) {
  Poly f = base;
  for (int s : w.sites) f = theta_apply(f, s, points);
  return f;
}

}  // namespace

CheckReport check_theta_words(const GroundState& gs, const nlohmann::json& fixture) {
  CheckReport r("fixture-words", gs.n);
  const int n = fixture.at("n").get<int>();
  if (gs.n != n) {
    r.fail("fixture is for a different size");
    return r;
  }
  const int points = 2 * n;
  const Poly base = psi_pi0(n);
  const LinkPattern pi0 = parse_pattern(fixture.at("base").at("pattern").get<std::string>());
  if (!(gs.at(pi0) == base)) r.fail("base entry differs");
  std::set<LinkPattern> reached{pi0};
  nlohmann::json replays = nlohmann::json::array();
  for (const auto& e : fixture.at("entries")) {
    ++r.cases;
    const int label = e.at("label").get<int>();
    const LinkPattern pi = parse_pattern(e.at("pattern").get<std::string>());
    const ThetaWord w = word_of(e.at("word"));
    const LinkPattern end = replay(w, n);
    reached.insert(end);
    if (!(end == pi)) {
      r.fail("label " + std::to_string(label) + ": word reaches " + end.to_string());
      continue;
    }
    if (auto it = gs.words.find(pi); it == gs.words.end() || !(replay(it->second, n) == pi)) {
      r.fail("label " + std::to_string(label) + ": builder word does not replay");
    }
    if (!(apply_word(base, w, points) == gs.at(pi))) {
      r.fail("label " + std::to_string(label) + ": Theta word value differs");
    }
    if (e.contains("note")) {
      replays.push_back({{"label", label}, {"word", e.at("word")}, {"note", e.at("note")}});
    }
  }
  if (reached.size() != gs.entries.size()) r.fail("words do not reach every pattern");
  for (const auto& d : fixture.at("delta_identities")) {
    ++r.cases;
    const int label = d.at("label").get<int>();
    const auto& entry = *std::find_if(
        fixture.at("entries").begin(), fixture.at("entries").end(),
        [&](const nlohmann::json& e) { return e.at("label").get<int>() == label; });
    const LinkPattern pi = parse_pattern(entry.at("pattern").get<std::string>());
    Poly f = delta_apply(apply_word(base, word_of(d.at("theta_word")), points),
                         d.at("delta_site").get<int>() - 1, points);
    for (const auto& s : d.at("subtract")) f -= apply_word(base, word_of(s), points);
    if (!(f == gs.at(pi))) r.fail("Delta identity for label " + std::to_string(label));
  }
  r.params["corrected_words"] = replays;
  return r;
}

std::map<LinkPattern, Poly> bidegrees_from_delta(const DeltaFamily& family) {
  std::map<LinkPattern, Poly> out;
  for (const auto& [pi, d] : family.deltas) out.emplace(pi, bidegree(d, family.n));
  return out;
}

std::map<LinkPattern, Poly> bidegrees_from_schubert(const SchubertFamily& family) {
  std::map<LinkPattern, Poly> out;
  for (const auto& [pi, s] : family.polys) out.emplace(pi, bidegree_from_schubert(s, family.n));
  return out;
}

CheckReport check_bidegree_table(const std::map<LinkPattern, Poly>& bidegrees, int n,
                             const nlohmann::json& fixture, const std::string& route) {
  CheckReport r("fixture-bidegrees", n);
  r.params["route"] = route;
  const VarNames vars = fixture.at("vars").get<VarNames>();
  const std::string key = "n" + std::to_string(n);
  if (!fixture.contains(key)) {
    r.fail("no fixture table for this size");
    return r;
  }
  const auto& table = fixture.at(key);
  if (table.size() != bidegrees.size()) r.fail("entry count differs");
  if (n == 3) {
    for (const auto& e : table) {
      ++r.cases;
      const LinkPattern pi = parse_pattern(e.at("pattern").get<std::string>());
      const Poly want = parse_poly(e.at("poly").get<std::string>(), vars);
      auto it = bidegrees.find(pi);
      if (it == bidegrees.end()) {
        r.fail("missing " + pi.to_string());
      } else if (!(it->second.with_vars(vars) == want)) {
        r.fail("label " + std::to_string(e.at("label").get<int>()) + ": got " +
               it->second.to_string());
      }
    }
    return r;
  }
  std::vector<std::string> want, got;
  for (const auto& e : table) {
    want.push_back(poly_to_json(parse_poly(e.at("poly").get<std::string>(), vars)).dump());
  }
  for (const auto& [pi, d] : bidegrees) got.push_back(poly_to_json(d.with_vars(vars)).dump());
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  r.cases = want.size();
  if (want != got) r.fail("multiset of bidegrees differs");
  return r;
}

CheckReport check_bidegree_sum(const std::map<LinkPattern, Poly>& bidegrees, int n) {
  CheckReport r("bidegree-sum", n);
  const VarNames vars = ab_vars();
  Poly sum = Poly::constant(vars, 0);
  for (const auto& [pi, d] : bidegrees) sum += d.with_vars(vars);
  const Poly want = (Poly::variable(vars, 0) + Poly::variable(vars, 1)).pow(n * (n - 1));
  r.cases = bidegrees.size();
  if (!(sum == want)) r.fail("sum is " + sum.to_string());
  return r;
}

}  // namespace crossloop
