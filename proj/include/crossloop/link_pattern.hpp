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

#ifndef CROSSLOOP_LINK_PATTERN_HPP_
#define CROSSLOOP_LINK_PATTERN_HPP_

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crossloop {

class NotPermutationPattern : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A chord diagram on 2n points: a fixed-point-free involution.
//
// Points and sites are 0-based in the C++ API. Site i denotes the pair of
// neighbours (i, i+1 mod 2n). Anything printed or serialized is 1-based.
class LinkPattern {
 public:
  LinkPattern() = default;
  // Throws std::invalid_argument unless `partner` is a fixed-point-free
  // involution on 0..2n-1.
  explicit LinkPattern(std::vector<int> partner);
  static LinkPattern from_one_based(const std::vector<int>& partner);
  // pi_0(i) = i + n: every pair of chords crosses.
  static LinkPattern maximally_crossing(int n);

  int size() const { return static_cast<int>(partner_.size()) / 2; }
  int points() const { return static_cast<int>(partner_.size()); }
  int partner(int i) const { return partner_[i]; }
  const std::vector<int>& partners() const { return partner_; }
  std::vector<int> one_based() const;
  int next(int i) const { return (i + 1) % points(); }

  // Chord {i, i+1 mod 2n}.
  bool has_arch(int site) const { return partner_[site] == next(site); }

  // "(1 4)(2 3)"
  std::string to_string() const;

  auto operator<=>(const LinkPattern&) const = default;
  bool operator==(const LinkPattern&) const = default;

 private:
  std::vector<int> partner_;
};

// Sequence of f-moves applied to pi_0, first entry applied first. Sites are
// 0-based; the printed word Theta_{i_1} ... Theta_{i_k} Psi_{pi_0} lists
// the same sites in reverse order and 1-based.
struct ThetaWord {
  std::vector<int> sites;
  bool operator==(const ThetaWord&) const = default;
  std::vector<int> one_based() const;
};

// All (2n-1)!! patterns, generated by pairing the smallest unmatched point
// with each candidate in increasing order.
std::vector<LinkPattern> enumerate_patterns(int n);

LinkPattern apply_e(const LinkPattern& pi, int site);
// Conjugation by the transposition (i, i+1); identity if the arch is present.
LinkPattern apply_f(const LinkPattern& pi, int site);
int crossings(const LinkPattern& pi);
// i -> i+1 on every label.
LinkPattern rotate(const LinkPattern& pi);
LinkPattern rotate(const LinkPattern& pi, int times);
// i -> 2n+1-i (1-based).
LinkPattern reflect(const LinkPattern& pi);
LinkPattern replay(const ThetaWord& word, int n);

// Every pi' != pi with e_site pi' == pi.
std::vector<LinkPattern> preimages_e(const LinkPattern& pi, int site);

// True iff every chord joins {0..n-1} to {n..2n-1}.
bool is_permutation_pattern(const LinkPattern& pi);
// pi(i) = hat(n+1-i) + n in 1-based notation. Returned 1-based as a one-line
// permutation of {1..n}. Throws NotPermutationPattern.
std::vector<int> perm_hat(const LinkPattern& pi);
LinkPattern from_perm_hat(const std::vector<int>& hat);
std::vector<LinkPattern> permutation_patterns(int n);

// Removes the arch at (site, site+1 mod 2n) and relabels the remaining
// points in increasing order of their old labels.
LinkPattern remove_arch(const LinkPattern& pi, int site);

// Breadth-first spanning tree of the f-move graph rooted at pi_0, where the
// move at site i is allowed only from patterns without the arch (i, i+1).
struct ThetaTree {
  struct Node {
    ThetaWord word;
    LinkPattern parent;
    int site = -1;  // parent --f_site--> this; -1 for the root
    int depth = 0;
  };
  struct Edge {
    LinkPattern from;
    int site;
    LinkPattern to;
  };
  int n = 0;
  // Patterns in discovery order (root first).
  std::vector<LinkPattern> order;
  std::map<LinkPattern, Node> nodes;
  // Admissible moves that are not tree edges.
  std::vector<Edge> extra_edges;
};

// Frontier processing order: crossing count descending, then partner vector;
// within a pattern, sites ascending.
ThetaTree build_theta_tree(int n);
ThetaWord word_from_pi0(const LinkPattern& pi);

}  // namespace crossloop

#endif  // CROSSLOOP_LINK_PATTERN_HPP_
