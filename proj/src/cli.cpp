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

#include "crossloop/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>

#include "crossloop/brauer.hpp"
#include "crossloop/degrees.hpp"
#include "crossloop/fixtures.hpp"
#include "crossloop/link_pattern.hpp"
#include "crossloop/poly_ops.hpp"
#include "crossloop/serialize.hpp"
#include "crossloop/stream.hpp"
#include "crossloop/sumrules.hpp"

namespace crossloop {

namespace {

const std::set<std::string>& free_suites() {
  static const std::set<std::string> names = {"brauer", "delta", "schubert", "stream"};
  return names;
}

CheckReport merge(const std::string& name, int n, const std::vector<CheckReport>& parts) {
  CheckReport r(name, n);
  for (const auto& p : parts) {
    r.cases += std::max<std::size_t>(p.cases, 1);
    if (p.hard_failure()) r.fail(p.check + ": " + p.witness.value_or("failed"));
  }
  return r;
}

std::vector<CheckReport> brauer_suite(const SuiteInputs& in) {
  const int n = in.n;
  std::vector<CheckReport> out{check_brauer_relations(n)};
  const auto values = random_rationals(4 * in.pair_points, in.seed);
  std::vector<CheckReport> ybe, unit, vn, bn;
  int pairs = 0;
  for (std::size_t k = 0; k + 1 < values.size() && pairs < in.pair_points; k += 2) {
    const Rational& u = values[k];
    const Rational& v = values[k + 1];
    const Rational d = v - u;
    if (d == 0 || d == 2 || d == -2 || d == 1 || d == -1) continue;
    ++pairs;
    ybe.push_back(check_yang_baxter(n, u, v));
    const int site = pairs % (2 * n);
    unit.push_back(check_rcheck_unitarity(n, site, u, v));
    vn.push_back(check_vn_invariance(n, site, u, v));
    if (site != n - 1 && site != 2 * n - 1) bn.push_back(check_bn_relation(n, site, u, v));
  }
  out.push_back(merge("yang-baxter", n, ybe));
  out.back().params["pairs"] = pairs;
  out.push_back(merge("rcheck-unitarity", n, unit));
  out.push_back(merge("vn-invariance", n, vn));
  out.push_back(merge("bn-relation", n, bn));
  return out;
}

std::vector<CheckReport> delta_suite(int n) {
  const DeltaFamily family = build_delta_recursive(n);
  std::vector<CheckReport> out{verify_delta_symmetries(family), check_delta_sum(family),
                               check_delta_top_degree(family)};
  out.push_back(check_bidegree_sum(bidegrees_from_delta(family), n));
  return out;
}

std::vector<CheckReport> schubert_suite(int n) {
  const DeltaFamily deltas = build_delta_recursive(n);
  const SchubertFamily family = schubert_family_recursive(n);
  const auto from_delta = bidegrees_from_delta(deltas);
  const auto from_s = bidegrees_from_schubert(family);
  CheckReport agree("bidegree-routes", n);
  for (const auto& [pi, d] : from_delta) {
    ++agree.cases;
    auto it = from_s.find(pi);
    if (it == from_s.end() || !(it->second == d)) agree.fail(pi.to_string());
  }
  CheckReport top("schubert-top", n);
  const VarNames vars = t_vars(n);
  Poly want = Poly::constant(vars, 1);
  for (int i = 0; i < n; ++i) want *= Poly::variable(vars, i).pow(n - 1 - i);
  top.cases = 1;
  if (!(family.at(LinkPattern::maximally_crossing(n)) == want)) top.fail("s_{pi_0}");
  return {agree, top, observe_schubert_positivity(family)};
}

nlohmann::json stream_json(const StreamSummary& s) {
  nlohmann::json h = nlohmann::json::object();
  for (const auto& [pi, v] : s.homogeneous) h[pi.to_string()] = v.get_str();
  return {{"n", s.n},
          {"entries", s.entries},
          {"max_terms", s.max_terms},
          {"homogeneous", h},
          {"homogeneous_sum", s.homogeneous_sum.get_str()},
          {"perm_sum_holds", s.perm_sum_holds},
          {"refined_total", s.refined_total.to_string()}};
}

std::vector<CheckReport> stream_suite(int n) {
  const StreamSummary s = stream_summary(n);
  CheckReport r("stream-build", n);
  r.cases = s.entries;
  r.params = stream_json(s);
  r.params.erase("homogeneous");
  if (s.entries != enumerate_patterns(n).size()) r.fail("not every pattern reached");
  const Integer z = homogeneous_number(n).determinant;
  if (s.homogeneous_sum != z) r.fail("homogeneous sum " + s.homogeneous_sum.get_str());
  if (!s.perm_sum_holds) r.fail("sum over the permutation sector differs from the product");
  const VarNames t{"t"};
  const RationalPoint one{Rational(1)};
  if (s.refined_total.coefficient(Monomial()) != Rational(homogeneous_number(n - 1).determinant)) {
    r.fail("P_n(0) differs from the previous homogeneous number");
  }
  if (evaluate(s.refined_total, one) != Rational(z)) r.fail("P_n(1) differs from Z_n(0)");
  return {r};
}

std::vector<CheckReport> state_suite(const std::string& name, const SuiteInputs& in) {
  const GroundState& gs = *in.gs;
  const int n = in.n;
  if (name == "perm-sum") return {perm_sum_check(gs)};
  if (name == "pfaffian-sum") {
    const auto pts = certification_points(n, in.random_points, in.seed);
    std::vector<RationalPoint> all(pts.sweeps);
    all.insert(all.end(), pts.random.begin(), pts.random.end());
    CheckReport r = full_sum_check(gs, all);
    r.params["sweep_points"] = pts.sweeps.size();
    r.params["random_points"] = pts.random.size();
    return {r};
  }
  if (name == "recursion") {
    std::vector<CheckReport> out;
    for (int site = 0; site < 2 * n; ++site) out.push_back(recursion_check(gs, *in.prev, site));
    return out;
  }
  if (name == "homogeneous") {
    CheckReport r("homogeneous-sum", n);
    Integer sum = 0;
    for (const auto& [pi, v] : homogeneous(gs)) sum += v;
    const HomogeneousNumber h = homogeneous_number(n);
    r.cases = gs.entries.size();
    r.params["sum"] = sum.get_str();
    if (sum != h.determinant) r.fail("sum " + sum.get_str() + " vs " + h.determinant.get_str());
    return {r};
  }
  if (name == "delta-from-psi") {
    return {compare_delta_families(build_delta_recursive(n), delta_family_from_psi(gs))};
  }
  if (name == "schubert-from-psi") {
    return {compare_schubert_families(schubert_family_recursive(n),
                                      schubert_family_from_psi(gs))};
  }
  if (name == "refined") {
    const RefinedTable table = refined_polys(gs);
    CheckReport r("refined-ends", n);
    r.cases = 2;
    const Rational at0 = table.total.coefficient(Monomial());
    const RationalPoint one{Rational(1)};
    const Rational at1 = evaluate(table.total, one);
    r.params["total"] = table.total.to_string();
    if (at0 != Rational(homogeneous_number(n - 1).determinant)) r.fail("P_n(0) = " + at0.get_str());
    if (at1 != Rational(homogeneous_number(n).determinant)) r.fail("P_n(1) = " + at1.get_str());
    return {r, observe_refined_positivity(table)};
  }
  if (name == "ab-normalization") return {observe_ab_normalization(gs)};
  VerifyOptions opts;
  opts.suites = {name};
  opts.offset = in.offset;
  if (name == "tprime") opts.points = in.tprime_points;
  return verify(gs, opts);
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  f << j.dump(1) << "\n";
}

void print_reports(std::ostream& out, const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    const char* tag = r.observation ? (r.pass ? "CONJECTURE-HOLDS" : "CONJECTURE-FAILS")
                                    : (r.pass ? "PASS" : "FAIL");
    out << tag << " " << r.check << " n=" << r.n << " cases=" << r.cases;
    if (r.witness) out << " witness: " << *r.witness;
    out << "\n";
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool can_build(int n) { return n <= kDefaultBuildLimit; }

GroundState build_state(int n, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  auto [gs, report] = build(n);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "built Psi_" << n << ": " << gs.entries.size() << " entries in " << s << " s\n";
  if (!report.pass()) throw Inconsistent("build checks failed for n = " + std::to_string(n));
  return gs;
}

nlohmann::json reports_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return arr;
}

int cmd_gen(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.n == 4 && c.full_n4) {
    // Entries at n = 4 are far too large to serialize; write the summary.
    const StreamSummary s = stream_summary(4);
    const auto path = c.run_dir / "stream-4.json";
    write_json(path, stream_json(s));
    out << "homogeneous sum " << s.homogeneous_sum.get_str() << ", permutation-sector sum "
        << (s.perm_sum_holds ? "holds" : "FAILS") << ", P_4(t) = " << s.refined_total.to_string()
        << "\nwrote " << path.string() << "\n";
    return s.perm_sum_holds && s.homogeneous_sum == homogeneous_number(4).determinant ? kExitOk
                                                                                     : kExitFailure;
  }
  if (!can_build(c.n)) throw UsageError("gen beyond n = 3 needs --full-n4 (n = 4 only)");
  const auto start = std::chrono::steady_clock::now();
  auto [gs, report] = build(c.n);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "built Psi_" << c.n << " in " << s << " s\n";
  const auto path = c.run_dir / ("psi-" + std::to_string(c.n) + ".json");
  write_json(path, ground_state_to_json(gs));
  nlohmann::json rj = report.to_json();
  rj.erase("seconds");
  write_json(c.run_dir / ("build-" + std::to_string(c.n) + ".json"), rj);
  print_reports(out, report.checks);
  out << "wrote " << path.string() << " (" << gs.entries.size() << " entries)\n";
  return report.pass() ? kExitOk : kExitFailure;
}

int cmd_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<std::string> wanted;
  const bool all = c.suites.empty() ||
                   std::find(c.suites.begin(), c.suites.end(), "all") != c.suites.end();
  const auto& names = check_suite_names();
  for (const auto& s : all ? names : c.suites) {
    if (std::find(names.begin(), names.end(), s) == names.end()) {
      throw UsageError("unknown suite " + s);
    }
    wanted.push_back(s);
  }
  const bool need_state = std::any_of(wanted.begin(), wanted.end(),
                                      [](const std::string& s) { return !free_suites().contains(s); });
  std::optional<GroundState> gs, prev;
  if (need_state && can_build(c.n)) {
    gs = build_state(c.n, err);
    if (std::find(wanted.begin(), wanted.end(), "recursion") != wanted.end()) {
      prev = build_state(c.n - 1, err);
    }
  } else if (need_state && !all) {
    throw UsageError("suite needs the full build, unavailable at this n");
  }
  SuiteInputs in;
  in.n = c.n;
  in.gs = gs ? &*gs : nullptr;
  in.prev = prev ? &*prev : nullptr;
  in.offset = Rational(c.point_offset);
  in.seed = c.seed;
  in.tprime_points = c.n <= 2 ? 20 : 5;
  std::vector<CheckReport> reports;
  for (const auto& s : wanted) {
    if (!free_suites().contains(s) && !gs) {
      err << "skipping " << s << ": no full build at n = " << c.n << "\n";
      continue;
    }
    if (s == "recursion" && c.n < 2) continue;
    if (s == "stream" && !(c.n <= kDefaultBuildLimit || (c.n == 4 && c.full_n4))) {
      if (!all) throw UsageError("stream beyond n = 3 needs --full-n4 (n = 4 only)");
      err << "skipping stream: needs --full-n4 at n = " << c.n << "\n";
      continue;
    }
    auto part = run_suite(s, in);
    print_reports(out, part);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  write_json(c.run_dir / ("check-" + std::to_string(c.n) + ".json"),
             {{"n", c.n}, {"pass", all_pass(reports)}, {"reports", reports_json(reports)}});
  return all_pass(reports) ? kExitOk : kExitFailure;
}

std::string one_line(const std::vector<int>& v) { return permutation_label(v); }

int cmd_degrees(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const int n = c.n;
  const DeltaFamily deltas = build_delta_recursive(n);
  const SchubertFamily schubert = schubert_family_recursive(n);
  nlohmann::json by_pattern = nlohmann::json::object();
  nlohmann::json by_hat = nlohmann::json::object();
  for (const auto& pi : permutation_patterns(n)) {
    const std::string key = one_line(pi.one_based());
    const std::string hat = one_line(perm_hat(pi));
    const Poly& s = schubert.at(pi);
    by_pattern[key] = {{"chords", pi.to_string()},
                       {"hat", hat},
                       {"crossings", crossings(pi)},
                       {"delta", deltas.at(pi).to_string()},
                       {"bidegree", bidegree(deltas.at(pi), n).to_string()},
                       {"bidegree_from_s", bidegree_from_schubert(s, n).to_string()},
                       {"schubert", s.to_string()}};
    by_hat[hat] = key;
  }
  nlohmann::json doc{{"n", n}, {"by_pattern", by_pattern}, {"by_hat", by_hat}};
  if (can_build(n)) {
    const GroundState gs = build_state(n, err);
    const RefinedTable table = refined_polys(gs);
    nlohmann::json refined = nlohmann::json::object();
    for (const auto& [pi, p] : table.entries) {
      refined[one_line(pi.one_based())] = {{"chords", pi.to_string()},
                                           {"refined", p.to_string()},
                                           {"doubly_refined", table.doubly.at(pi).to_string()}};
    }
    doc["refined"] = refined;
    doc["refined_total"] = table.total.to_string();
    doc["doubly_refined_total"] = table.doubly_total.to_string();
    out << "P_" << n << "(t) = " << table.total.to_string() << "\n";
  } else if (n == 4 && c.full_n4) {
    const StreamSummary s = stream_summary(n);
    doc["refined_total"] = s.refined_total.to_string();
    out << "P_" << n << "(t) = " << s.refined_total.to_string() << "\n";
  }
  const auto path = c.run_dir / ("degrees-" + std::to_string(n) + ".json");
  write_json(path, doc);
  out << "wrote " << path.string() << " (" << by_pattern.size() << " permutation patterns)\n";
  return kExitOk;
}

int cmd_numbers(const RunConfig& c, std::ostream& out, std::ostream&) {
  bool ok = true;
  std::string csv = "n,determinant,pfaffian,lgv,match\n";
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 1; n <= c.n_max; ++n) {
    const HomogeneousNumber h = homogeneous_number(n);
    std::optional<Integer> lgv;
    if (n <= 4) lgv = lgv_count(n);
    const bool match = h.agree() && (!lgv || *lgv == h.determinant);
    ok = ok && match;
    csv += std::to_string(n) + "," + h.determinant.get_str() + "," + h.pfaffian.get_str() + "," +
           (lgv ? lgv->get_str() : "") + "," + (match ? "1" : "0") + "\n";
    nlohmann::json row{{"n", n},
                       {"determinant", h.determinant.get_str()},
                       {"pfaffian", h.pfaffian.get_str()},
                       {"match", match}};
    row["lgv"] = lgv ? nlohmann::json(lgv->get_str()) : nlohmann::json(nullptr);
    rows.push_back(row);
  }
  nlohmann::json asym = nlohmann::json::array();
  for (const auto& a : asymptotic_report(c.n_max)) {
    asym.push_back({{"n", a.n}, {"value", a.value.get_str()}, {"scaled_log", a.scaled_log}});
  }
  std::filesystem::create_directories(c.run_dir);
  std::ofstream(c.run_dir / "numbers.csv") << csv;
  write_json(c.run_dir / "numbers.json",
             {{"rows", rows}, {"asymptotic", asym}, {"limit", asymptotic_limit()}});
  if (c.format == "csv") {
    out << csv;
  } else {
    out << nlohmann::json{{"rows", rows}, {"asymptotic", asym}}.dump(1) << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_fixtures(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto dir = c.fixture_dir.empty() ? default_fixture_dir() : c.fixture_dir;
  std::vector<CheckReport> reports;
  auto state = [&](int n) {
    const auto cached = c.run_dir / ("psi-" + std::to_string(n) + ".json");
    if (std::filesystem::exists(cached)) {
      std::ifstream f(cached);
      GroundState gs = ground_state_from_json(nlohmann::json::parse(f));
      if (gs.n == n) return gs;
    }
    return build_state(n, err);
  };
  if (c.n == 2) {
    reports.push_back(check_psi2_entries(state(2), load_fixture(dir, "psi2_entries.json")));
  } else if (c.n == 3) {
    reports.push_back(check_theta_words(state(3), load_fixture(dir, "psi3_words.json")));
  }
  if (c.n == 3 || c.n == 4) {
    const auto fixture = load_fixture(dir, "bidegrees.json");
    reports.push_back(check_bidegree_table(bidegrees_from_delta(build_delta_recursive(c.n)), c.n,
                                       fixture, "delta"));
    reports.push_back(check_bidegree_table(
        bidegrees_from_schubert(schubert_family_recursive(c.n)), c.n, fixture, "schubert"));
  }
  if (reports.empty()) throw UsageError("fixtures exist for n = 2, 3, 4");
  print_reports(out, reports);
  write_json(c.run_dir / ("fixtures-" + std::to_string(c.n) + ".json"),
             {{"n", c.n}, {"pass", all_pass(reports)}, {"reports", reports_json(reports)}});
  return all_pass(reports) ? kExitOk : kExitFailure;
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"brauer", "delta", "schubert", "stream"};
    for (const auto& s : verify_suite_names()) v.push_back(s);
    for (const char* s : {"perm-sum", "pfaffian-sum", "recursion", "homogeneous",
                          "delta-from-psi", "schubert-from-psi", "refined", "ab-normalization"}) {
      v.push_back(s);
    }
    return v;
  }();
  return names;
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteInputs& in) {
  if (name == "brauer") return brauer_suite(in);
  if (name == "delta") return delta_suite(in.n);
  if (name == "schubert") return schubert_suite(in.n);
  if (name == "stream") return stream_suite(in.n);
  if (!in.gs) throw std::invalid_argument("suite " + name + " needs a ground state");
  if (name == "recursion" && !in.prev) throw std::invalid_argument("recursion needs size n-1");
  return state_suite(name, in);
}

std::vector<Rational> random_rationals(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const long num = static_cast<long>(rng() % 49) - 24;
    const long den = static_cast<long>(rng() % 17) + 1;
    out.push_back(ratio(num, den));
  }
  return out;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "numbers") {
      if (c.n_max < 0) throw UsageError("--n-max must be nonnegative");
      if (c.format != "csv" && c.format != "json") throw UsageError("--format is csv or json");
      return cmd_numbers(c, out, err);
    }
    if (c.n < 1) throw UsageError("--n must be at least 1");
    if (c.n > kMaxVars / 2) throw UsageError("--n is limited to 8");
    if (c.command == "gen") return cmd_gen(c, out, err);
    if (c.command == "check") return cmd_check(c, out, err);
    if (c.command == "degrees") return cmd_degrees(c, out, err);
    if (c.command == "fixtures") return cmd_fixtures(c, out, err);
    throw UsageError("unknown command " + c.command);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace crossloop
