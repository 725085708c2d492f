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

#include "crossloop/link_pattern.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crossloop {

LinkPattern::LinkPattern(std::vector<int> partner) : partner_(std::move(partner)) {
  const int m = static_cast<int>(partner_.size());
  if (m == 0 || m % 2 != 0) {
    throw std::invalid_argument("LinkPattern: need an even, positive number of points");
  }
  for (int i = 0; i < m; ++i) {
    const int j = partner_[i];
    if (j < 0 || j >= m || j == i || partner_[j] != i) {
      throw std::invalid_argument("LinkPattern: not a fixed-point-free involution");
    }
  }
}

LinkPattern LinkPattern::from_one_based(const std::vector<int>& partner) {
  std::vector<int> p(partner);
  for (auto& x : p) --x;
  return LinkPattern(std::move(p));
}

LinkPattern LinkPattern::maximally_crossing(int n) {
  std::vector<int> p(2 * n);
  for (int i = 0; i < 2 * n; ++i) p[i] = (i + n) % (2 * n);
  return LinkPattern(std::move(p));
}

std::vector<int> LinkPattern::one_based() const {
  std::vector<int> p(partner_);
  for (auto& x : p) ++x;
  return p;
}

std::string LinkPattern::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < points(); ++i) {
    if (partner_[i] > i) os << "(" << i + 1 << " " << partner_[i] + 1 << ")";
  }
  return os.str();
}

std::vector<int> ThetaWord::one_based() const {
  std::vector<int> w(sites);
  for (auto& x : w) ++x;
  return w;
}

namespace {

void enumerate_rec(std::vector<int>& partner, std::vector<LinkPattern>& out) {
  const int m = static_cast<int>(partner.size());
  int a = 0;
  while (a < m && partner[a] >= 0) ++a;
  if (a == m) {
    out.emplace_back(partner);
    return;
  }
  for (int b = a + 1; b < m; ++b) {
    if (partner[b] >= 0) continue;
    partner[a] = b;
    partner[b] = a;
    enumerate_rec(partner, out);
    partner[a] = partner[b] = -1;
  }
}

}  // namespace

std::vector<LinkPattern> enumerate_patterns(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_patterns: n must be >= 1");
  std::vector<int> partner(2 * n, -1);
  std::vector<LinkPattern> out;
  enumerate_rec(partner, out);
  return out;
}

LinkPattern apply_e(const LinkPattern& pi, int site) {
  const int i = site;
  const int j = pi.next(site);
  if (pi.partner(i) == j) return pi;
  std::vector<int> p = pi.partners();
  const int a = p[i];
  const int b = p[j];
  p[i] = j;
  p[j] = i;
  p[a] = b;
  p[b] = a;
  return LinkPattern(std::move(p));
}

LinkPattern apply_f(const LinkPattern& pi, int site) {
  const int i = site;
  const int j = pi.next(site);
  if (pi.partner(i) == j) return pi;
  auto s = [i, j](int x) { return x == i ? j : (x == j ? i : x); };
  std::vector<int> p(pi.points());
  for (int a = 0; a < pi.points(); ++a) p[s(a)] = s(pi.partner(a));
  return LinkPattern(std::move(p));
}

int crossings(const LinkPattern& pi) {
  int count = 0;
  for (int a = 0; a < pi.points(); ++a) {
    const int b = pi.partner(a);
    if (b < a) continue;
    for (int c = a + 1; c < b; ++c) {
      if (pi.partner(c) > b) ++count;
    }
  }
  return count;
}

LinkPattern rotate(const LinkPattern& pi) {
  const int m = pi.points();
  std::vector<int> p(m);
  for (int a = 0; a < m; ++a) p[(a + 1) % m] = (pi.partner(a) + 1) % m;
  return LinkPattern(std::move(p));
}

LinkPattern rotate(const LinkPattern& pi, int times) {
  const int m = pi.points();
  times = ((times % m) + m) % m;
  LinkPattern r = pi;
  for (int k = 0; k < times; ++k) r = rotate(r);
  return r;
}

LinkPattern reflect(const LinkPattern& pi) {
  const int m = pi.points();
  std::vector<int> p(m);
  for (int a = 0; a < m; ++a) p[m - 1 - a] = m - 1 - pi.partner(a);
  return LinkPattern(std::move(p));
}

LinkPattern replay(const ThetaWord& word, int n) {
  LinkPattern pi = LinkPattern::maximally_crossing(n);
  for (int site : word.sites) pi = apply_f(pi, site);
  return pi;
}

std::vector<LinkPattern> preimages_e(const LinkPattern& pi, int site) {
  std::vector<LinkPattern> out;
  if (!pi.has_arch(site)) return out;
  for (const auto& cand : enumerate_patterns(pi.size())) {
    if (cand != pi && apply_e(cand, site) == pi) out.push_back(cand);
  }
  return out;
}

bool is_permutation_pattern(const LinkPattern& pi) {
  const int n = pi.size();
  for (int i = 0; i < n; ++i) {
    if (pi.partner(i) < n) return false;
  }
  return true;
}

std::vector<int> perm_hat(const LinkPattern& pi) {
  if (!is_permutation_pattern(pi)) {
    throw NotPermutationPattern("perm_hat: " + pi.to_string() +
                                " has a chord inside one half");
  }
  const int n = pi.size();
  // 1-based: pi(i) = hat(n+1-i) + n, i.e. hat(k) = pi(n+1-k) - n.
  std::vector<int> hat(n);
  for (int k = 1; k <= n; ++k) hat[k - 1] = (pi.partner(n - k) + 1) - n;
  return hat;
}

LinkPattern from_perm_hat(const std::vector<int>& hat) {
  const int n = static_cast<int>(hat.size());
  std::vector<int> seen(n + 1, 0);
  for (int v : hat) {
    if (v < 1 || v > n || seen[v]++) {
      throw std::invalid_argument("from_perm_hat: not a permutation");
    }
  }
  std::vector<int> p(2 * n);
  for (int i = 1; i <= n; ++i) {
    const int j = hat[n - i] + n;  // 1-based partner of i
    p[i - 1] = j - 1;
    p[j - 1] = i - 1;
  }
  return LinkPattern(std::move(p));
}

std::vector<LinkPattern> permutation_patterns(int n) {
  std::vector<LinkPattern> out;
  for (const auto& pi : enumerate_patterns(n)) {
    if (is_permutation_pattern(pi)) out.push_back(pi);
  }
  return out;
}

LinkPattern remove_arch(const LinkPattern& pi, int site) {
  if (!pi.has_arch(site)) {
    throw std::invalid_argument("remove_arch: no arch at site " + std::to_string(site + 1));
  }
  const int m = pi.points();
  const int a = site;
  const int b = pi.next(site);
  std::vector<int> label(m, -1);
  int next_label = 0;
  for (int x = 0; x < m; ++x) {
    if (x != a && x != b) label[x] = next_label++;
  }
  std::vector<int> p(m - 2);
  for (int x = 0; x < m; ++x) {
    if (label[x] >= 0) p[label[x]] = label[pi.partner(x)];
  }
  return LinkPattern(std::move(p));
}

ThetaTree build_theta_tree(int n) {
  ThetaTree tree;
  tree.n = n;
  const LinkPattern root = LinkPattern::maximally_crossing(n);
  tree.nodes[root] = ThetaTree::Node{};
  tree.order.push_back(root);
  std::vector<LinkPattern> frontier{root};
  int depth = 0;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(),
              [](const LinkPattern& x, const LinkPattern& y) {
                const int cx = crossings(x);
                const int cy = crossings(y);
                if (cx != cy) return cx > cy;
                return x < y;
              });
    ++depth;
    std::vector<LinkPattern> next;
    for (const auto& pi : frontier) {
      for (int site = 0; site < pi.points(); ++site) {
        if (pi.has_arch(site)) continue;
        LinkPattern to = apply_f(pi, site);
        auto it = tree.nodes.find(to);
        if (it == tree.nodes.end()) {
          ThetaTree::Node node;
          node.word = tree.nodes.at(pi).word;
          node.word.sites.push_back(site);
          node.parent = pi;
          node.site = site;
          node.depth = depth;
          tree.nodes.emplace(to, std::move(node));
          tree.order.push_back(to);
          next.push_back(to);
        } else {
          const auto& node = it->second;
          const bool is_tree_edge = node.site == site && node.parent == pi;
          if (!is_tree_edge) tree.extra_edges.push_back({pi, site, to});
        }
      }
    }
    frontier = std::move(next);
  }
  return tree;
}

ThetaWord word_from_pi0(const LinkPattern& pi) {
  ThetaTree tree = build_theta_tree(pi.size());
  return tree.nodes.at(pi).word;
}

}  // namespace crossloop
