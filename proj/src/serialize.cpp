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

#include "crossloop/serialize.hpp"

#include <sstream>

namespace crossloop {

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  const int nv = p.num_vars();
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(nv);
    for (int k = 0; k < nv; ++k) e[k] = m[k];
    terms.push_back({e, c.get_str()});
  }
  return {{"vars", p.vars()}, {"terms", terms}};
}

Poly poly_from_json(const nlohmann::json& j) {
  const VarNames vars = j.at("vars").get<VarNames>();
  std::vector<Poly::Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto e = t.at(0).get<std::vector<int>>();
    if (e.size() != vars.size()) throw std::invalid_argument("poly_from_json: exponent length");
    Rational c(t.at(1).get<std::string>());
    c.canonicalize();
    terms.emplace_back(Monomial(e), c);
  }
  return Poly(vars, std::move(terms));
}

std::string pattern_label(const LinkPattern& pi) { return pi.to_string(); }

LinkPattern parse_pattern(const std::string& text) {
  std::vector<std::pair<int, int>> chords;
  std::istringstream in(text);
  char ch;
  int max_label = 0;
  while (in >> ch) {
    if (ch != '(') throw std::invalid_argument("parse_pattern: expected '(' in " + text);
    int a, b;
    if (!(in >> a >> b >> ch) || ch != ')') {
      throw std::invalid_argument("parse_pattern: malformed chord in " + text);
    }
    chords.emplace_back(a, b);
    max_label = std::max({max_label, a, b});
  }
  std::vector<int> partner(max_label, 0);
  for (auto [a, b] : chords) {
    if (a < 1 || b < 1) throw std::invalid_argument("parse_pattern: label below 1");
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  return LinkPattern::from_one_based(partner);
}

std::string permutation_label(const std::vector<int>& w) {
  std::string s;
  for (int x : w) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

nlohmann::json ground_state_to_json(const GroundState& gs) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& pi : gs.patterns()) {
    nlohmann::json e{{"pattern", pattern_label(pi)}, {"poly", poly_to_json(gs.at(pi))}};
    if (auto it = gs.words.find(pi); it != gs.words.end()) e["word"] = it->second.one_based();
    entries.push_back(e);
  }
  return {{"n", gs.n}, {"vars", gs.vars}, {"entries", entries}};
}

GroundState ground_state_from_json(const nlohmann::json& j) {
  GroundState gs;
  gs.n = j.at("n").get<int>();
  gs.vars = j.at("vars").get<VarNames>();
  for (const auto& e : j.at("entries")) {
    const LinkPattern pi = parse_pattern(e.at("pattern").get<std::string>());
    gs.entries.emplace(pi, poly_from_json(e.at("poly")).with_vars(gs.vars));
    if (e.contains("word")) {
      ThetaWord w;
      for (int s : e.at("word").get<std::vector<int>>()) w.sites.push_back(s - 1);
      gs.words.emplace(pi, w);
    }
  }
  return gs;
}

}  // namespace crossloop
