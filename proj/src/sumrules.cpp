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

#include "crossloop/sumrules.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "crossloop/parallel.hpp"
#include "crossloop/poly_ops.hpp"

namespace crossloop {

SkewMatrix::SkewMatrix(int dim) : dim_(dim), upper_(dim * dim) {}

Rational SkewMatrix::at(int i, int j) const {
  if (i == j) return 0;
  if (i < j) return upper_[i * dim_ + j];
  return -upper_[j * dim_ + i];
}

void SkewMatrix::set(int i, int j, const Rational& v) {
  if (i >= j) throw std::invalid_argument("SkewMatrix::set: need i < j");
  upper_[i * dim_ + j] = v;
}

std::vector<std::vector<Rational>> SkewMatrix::dense() const {
  std::vector<std::vector<Rational>> a(dim_, std::vector<Rational>(dim_));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) a[i][j] = at(i, j);
  }
  return a;
}

Rational pfaffian(const SkewMatrix& m) {
  const int n = m.dim();
  if (n % 2) return 0;
  auto a = m.dense();
  Rational pf = 1;
  for (int k = 0; k < n; k += 2) {
    int p = k + 1;
    while (p < n && sgn(a[k][p]) == 0) ++p;
    if (p == n) return 0;
    if (p != k + 1) {
      std::swap(a[k + 1], a[p]);
      for (auto& row : a) std::swap(row[k + 1], row[p]);
      pf = -pf;
    }
    pf *= a[k][k + 1];
    // Unimodular congruences clearing rows k and k+1 beyond the pivot block.
    for (int i = k + 2; i < n; ++i) {
      const Rational alpha = a[k][i] / a[k][k + 1];
      if (sgn(alpha) != 0) {
        for (int c = 0; c < n; ++c) a[i][c] -= alpha * a[k + 1][c];
        for (int r = 0; r < n; ++r) a[r][i] -= alpha * a[r][k + 1];
      }
      const Rational beta = a[k + 1][i] / a[k + 1][k];
      if (sgn(beta) != 0) {
        for (int c = 0; c < n; ++c) a[i][c] -= beta * a[k][c];
        for (int r = 0; r < n; ++r) a[r][i] -= beta * a[r][k];
      }
    }
  }
  return pf;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && sgn(m[p][k]) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (int i = k + 1; i < n; ++i) {
      if (sgn(m[i][k]) == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

CheckReport perm_sum_check(const GroundState& gs) {
  CheckReport r("perm-sum", gs.n);
  const int n = gs.n;
  Poly sum(gs.vars);
  for (const auto& pi : permutation_patterns(n)) sum += gs.at(pi);
  Poly rhs = Poly::constant(gs.vars, 1);
  for (int block = 0; block < 2; ++block) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int a = block * n + i, b = block * n + j;
        rhs *= Poly::affine(gs.vars, 1, {{a, 1}, {b, -1}});
        rhs *= Poly::affine(gs.vars, 2, {{a, -1}, {b, 1}});
      }
    }
  }
  ++r.cases;
  if (!(sum == rhs)) r.fail("sum over the permutation sector differs from the product");
  return r;
}

namespace {

void require_regular(std::span<const Rational> z) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const Rational x = z[i] - z[j];
      if (sgn(x) == 0 || x == 1 || x == -1) {
        throw SingularPoint("z" + std::to_string(i + 1) + " - z" + std::to_string(j + 1) +
                            " = " + x.get_str());
      }
    }
  }
}

Rational f_of(const Rational& x) { return x / (1 - x * x); }

bool regular(std::span<const Rational> z) {
  try {
    require_regular(z);
    return true;
  } catch (const SingularPoint&) {
    return false;
  }
}

}  // namespace

Rational pfaffian_side(std::span<const Rational> z) {
  require_regular(z);
  const int m = static_cast<int>(z.size());
  SkewMatrix a(m);
  Rational prod = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Rational f = f_of(z[i] - z[j]);
      a.set(i, j, f);
      prod /= f;
    }
  }
  return pfaffian(a) * prod;
}

Rational matching_side(std::span<const Rational> z) {
  require_regular(z);
  const int m = static_cast<int>(z.size());
  Rational total = 0;
  for (const auto& pi : enumerate_patterns(m / 2)) {
    Rational term = crossings(pi) % 2 ? -1 : 1;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (pi.partner(i) != j) term /= f_of(z[i] - z[j]);
      }
    }
    total += term;
  }
  return total;
}

CertificationPoints certification_points(int n, int random_count, std::uint64_t seed) {
  const int m = 2 * n;
  const int per_line = 2 * n * (n - 1) + 1;
  CertificationPoints out;
  RationalPoint base(m);
  for (int k = 0; k < m; ++k) base[k] = ratio(3 * k + 1, 7);
  for (int k = 0; k < m; ++k) {
    int found = 0;
    for (int t = 1; found < per_line; ++t) {
      RationalPoint z = base;
      z[k] = ratio(t, 11) - ratio(5, 3);
      if (!regular(z)) continue;
      out.sweeps.push_back(z);
      ++found;
    }
  }
  int found = 0;
  for (int t = 1; found < per_line; ++t) {
    RationalPoint z = base;
    for (int k = 0; k < m; ++k) z[k] += ratio(t * (k + 2), 13 + k);
    if (!regular(z)) continue;
    out.sweeps.push_back(z);
    ++found;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-60, 60), den(1, 29);
  while (static_cast<int>(out.random.size()) < random_count) {
    RationalPoint z(m);
    for (auto& x : z) {
      x = ratio(num(rng), den(rng));
    }
    if (regular(z)) out.random.push_back(z);
  }
  return out;
}

CheckReport full_sum_check(const GroundState& gs, std::span<const RationalPoint> points) {
  CheckReport r("pfaffian-sum", gs.n);
  const int m = 2 * gs.n;
  Poly z_n(gs.vars);
  for (const auto& [pi, p] : gs.entries) z_n += p;

  ++r.cases;
  for (int i = 0; i + 1 < m; ++i) {
    if (!(z_n.swap_vars(i, i + 1) == z_n)) {
      r.fail("Z not symmetric under z" + std::to_string(i + 1) + " <-> z" +
             std::to_string(i + 2));
    }
  }

  std::vector<std::string> failures(points.size());
  parallel_for(points.size(), [&](std::size_t k) {
    const RationalPoint& z = points[k];
    const Rational lhs = evaluate(z_n, z);
    if (lhs != pfaffian_side(z)) {
      failures[k] = "sum of entries differs from the Pfaffian side";
      return;
    }
    for (int i = 0; i + 1 < m; ++i) {
      RationalPoint w = z;
      std::swap(w[i], w[i + 1]);
      if (evaluate(z_n, w) != lhs) {
        failures[k] = "Z changes under the swap of coordinates " + std::to_string(i + 1) +
                      ", " + std::to_string(i + 2);
        return;
      }
    }
  });
  for (std::size_t k = 0; k < points.size(); ++k) {
    ++r.cases;
    if (!failures[k].empty()) {
      std::string at;
      for (const auto& x : points[k]) at += (at.empty() ? "" : ",") + x.get_str();
      r.fail(failures[k] + " at (" + at + ")");
    }
  }
  r.params = {{"points", points.size()}};
  return r;
}

CheckReport recursion_check(const GroundState& gs, const GroundState& prev, int site) {
  CheckReport r("recursion", gs.n);
  r.params = {{"site", site + 1}};
  const int m = 2 * gs.n;
  const int i = site;
  const int j = (site + 1) % m;
  const Poly shifted = Poly::affine(gs.vars, 1, {{i, 1}});
  std::vector<int> keep;
  for (int k = 0; k < m; ++k) {
    if (k != i && k != j) keep.push_back(k);
  }
  Poly factor = Poly::constant(gs.vars, 1);
  for (int k : keep) {
    factor *= shifted_difference(gs.vars, j, k) * shifted_difference(gs.vars, k, i);
  }
  factor = substitute(factor, j, shifted);

  for (const auto& pi : gs.patterns()) {
    ++r.cases;
    const Poly lhs = substitute(gs.at(pi), j, shifted);
    if (!pi.has_arch(site)) {
      if (!lhs.is_zero()) r.fail("entry without the arch does not vanish at " + pi.to_string());
      continue;
    }
    const Poly smaller = prev.at(remove_arch(pi, site)).remap(keep, gs.vars);
    if (!(lhs == factor * smaller)) r.fail("recursion fails at " + pi.to_string());
  }
  return r;
}

namespace {

Integer binomial(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Integer to_integer(const Rational& q) {
  if (q.get_den() != 1) throw std::logic_error("expected an integer, got " + q.get_str());
  return q.get_num();
}

}  // namespace

HomogeneousNumber homogeneous_number(int n) {
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d[i][j] = Rational(binomial(2 * i + 2 * j + 1, 2 * i));
  }
  SkewMatrix s(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = i + 1; j < 2 * n; ++j) {
      if ((i + j) % 2 == 0) continue;
      const Integer b = binomial(i + j, i);
      s.set(i, j, Rational(j % 2 ? Integer(-b) : b));
    }
  }
  const Integer raw = to_integer(pfaffian(s));
  return {to_integer(determinant(d)), n % 2 ? Integer(-raw) : raw, raw};
}

namespace {

// Occupancy grid for the enumeration; paths live in [0, 2n-2] x [0, 2n-1].
struct PathGrid {
  int width, height;
  std::vector<char> used;
  PathGrid(int w, int h) : width(w), height(h), used(w * h, 0) {}
  char& at(int x, int y) { return used[y * width + x]; }
};

Integer count_from(PathGrid& g, int n, int path, int x, int y) {
  const int tx = 0, ty = 2 * path + 1;
  if (x == tx && y == ty) {
    if (path + 1 == n) return 1;
    const int sx = 2 * (path + 1);
    if (g.at(sx, 0)) return 0;
    g.at(sx, 0) = 1;
    Integer c = count_from(g, n, path + 1, sx, 0);
    g.at(sx, 0) = 0;
    return c;
  }
  Integer total = 0;
  if (x > tx && !g.at(x - 1, y)) {
    g.at(x - 1, y) = 1;
    total += count_from(g, n, path, x - 1, y);
    g.at(x - 1, y) = 0;
  }
  if (y < ty && !g.at(x, y + 1)) {
    g.at(x, y + 1) = 1;
    total += count_from(g, n, path, x, y + 1);
    g.at(x, y + 1) = 0;
  }
  return total;
}

}  // namespace

Integer lgv_count(int n) {
  if (n <= 0) return 1;
  PathGrid g(2 * n - 1, 2 * n);
  g.at(0, 0) = 1;
  return count_from(g, n, 0, 0, 0);
}

std::vector<AsymptoticRow> asymptotic_report(int n_max) {
  std::vector<AsymptoticRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const Integer v = homogeneous_number(n).determinant;
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    const double ln = std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
    rows.push_back({n, v, ln / (2.0 * n * n)});
  }
  return rows;
}

double asymptotic_limit() { return std::log(std::numbers::pi / 2); }

}  // namespace crossloop
