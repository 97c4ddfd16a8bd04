// Independent reference computations for the tests. Nothing here calls the
// library's rank, enumeration or expansion code; they share only the value
// types (Rational, MultiPoly, Arrangement as a container).
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <random>
#include <utility>
#include <vector>

#include "tuttekit/arithmetic.hpp"
#include "tuttekit/arrangement.hpp"
#include "tuttekit/multipoly.hpp"

namespace oracle {

using tuttekit::Arrangement;
using tuttekit::Hyperplane;
using tuttekit::Integer;
using tuttekit::MultiPoly;
using tuttekit::Rational;

// Plain Gaussian elimination over Q.
inline std::size_t rank_q(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// (central?, rank of normals) of a subset, by elimination on augmented rows.
inline std::pair<bool, std::size_t> subset_data(const Arrangement& a, std::uint64_t s) {
  std::vector<std::vector<Rational>> normals, augmented;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(s >> i & 1)) continue;
    std::vector<Rational> row(a[i].normal().begin(), a[i].normal().end());
    normals.push_back(row);
    row.push_back(a[i].offset());
    augmented.push_back(row);
  }
  const std::size_t r = rank_q(normals);
  return {r == rank_q(augmented), r};
}

// Tutte polynomial straight from the subset sum, over Q.
inline MultiPoly tutte(const Arrangement& a) {
  const MultiPoly x = MultiPoly::variable("x") - MultiPoly(1);
  const MultiPoly y = MultiPoly::variable("y") - MultiPoly(1);
  const std::size_t r = subset_data(a, (std::uint64_t{1} << a.size()) - 1).second;
  MultiPoly t = MultiPoly::zero_in({"x", "y"});
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << a.size()); ++s) {
    const auto [central, rb] = subset_data(a, s);
    if (!central) continue;
    const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(s));
    t += x.pow(static_cast<unsigned>(r - rb)) * y.pow(static_cast<unsigned>(size - rb));
  }
  return t;
}

// Point counts over F_p^d by evaluating every equation at every point.
inline std::vector<std::uint64_t> profile(const Arrangement& a, std::uint64_t p) {
  const std::size_t d = a.dim();
  std::vector<std::uint64_t> counts(a.size() + 1, 0);
  std::vector<std::uint64_t> point(d, 0);
  const Integer pp(static_cast<unsigned long>(p));
  auto on = [&](const Hyperplane& h) {
    if (h.is_loop()) return true;
    Integer v = -h.offset().get_num();
    for (std::size_t k = 0; k < d; ++k) v += h.normal()[k].get_num() * Integer(static_cast<unsigned long>(point[k]));
    return v % pp == 0;
  };
  while (true) {
    std::size_t h = 0;
    for (const auto& hp : a.hyperplanes()) h += on(hp);
    ++counts[h];
    std::size_t k = 0;
    while (k < d && ++point[k] == p) point[k++] = 0;
    if (k == d) break;
  }
  return counts;
}

// Chromatic polynomial of a multigraph by deletion-contraction on edges.
inline MultiPoly chromatic(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  const MultiPoly q = MultiPoly::variable("q");
  if (edges.empty()) return q.pow(static_cast<unsigned>(vertices));
  auto [u, v] = edges.back();
  edges.pop_back();
  if (u == v) return MultiPoly::zero_in({"q"});
  const MultiPoly deleted = chromatic(vertices, edges);
  if (u > v) std::swap(u, v);
  // merge v into u and renumber vertices above v
  for (auto& [a, b] : edges) {
    for (auto* e : {&a, &b}) {
      if (*e == v) *e = u;
      else if (*e > v) --*e;
    }
  }
  return deleted - chromatic(vertices - 1, edges);
}

inline Arrangement random_arrangement(std::mt19937_64& rng, std::size_t max_n, std::size_t max_d, long bound,
                                      bool affine) {
  std::uniform_int_distribution<std::size_t> nd(1, max_n), dd(1, max_d);
  std::uniform_int_distribution<long> entry(-bound, bound);
  const std::size_t n = nd(rng), d = dd(rng);
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> normal(d);
    bool zero = true;
    for (auto& v : normal) {
      v = entry(rng);
      zero = zero && v == 0;
    }
    const Rational offset = (affine && !zero) ? Rational(entry(rng)) : Rational(0);
    hs.emplace_back(std::move(normal), offset);
  }
  return Arrangement(d, std::move(hs));
}

struct LatticeCount {
  long points = 0;
  long interior = 0;  // relative interior
};

// Lattice points of the zonotope of vectors in Z^2 by testing every point of
// the bounding box against the convex hull of all subset sums.
inline LatticeCount zonotope_points_2d(const std::vector<std::pair<long, long>>& vectors) {
  std::vector<std::pair<long, long>> sums{{0, 0}};
  for (const auto& [a, b] : vectors) {
    const std::size_t k = sums.size();
    for (std::size_t i = 0; i < k; ++i) sums.emplace_back(sums[i].first + a, sums[i].second + b);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  auto cross = [](std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  // monotone chain hull, counter-clockwise, collinear points dropped
  std::vector<std::pair<long, long>> hull;
  if (sums.size() <= 1) {
    hull = sums;
  } else {
    std::vector<std::pair<long, long>> h(2 * sums.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < sums.size(); ++i) {
      while (k >= 2 && cross(h[k - 2], h[k - 1], sums[i]) <= 0) --k;
      h[k++] = sums[i];
    }
    for (std::size_t i = sums.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && cross(h[k - 2], h[k - 1], sums[i]) <= 0) --k;
      h[k++] = sums[i];
    }
    h.resize(k - 1);
    hull = h;
  }
  long xmin = sums.front().first, xmax = sums.back().first, ymin = sums[0].second, ymax = sums[0].second;
  for (const auto& s : sums) {
    ymin = std::min(ymin, s.second);
    ymax = std::max(ymax, s.second);
  }
  LatticeCount out;
  for (long x = xmin; x <= xmax; ++x) {
    for (long y = ymin; y <= ymax; ++y) {
      const std::pair<long, long> pt{x, y};
      if (hull.size() == 1) {
        if (pt == hull[0]) {
          ++out.points;
          ++out.interior;
        }
      } else if (hull.size() == 2) {
        const auto& a = hull[0];
        const auto& b = hull[1];
        if (cross(a, b, pt) != 0) continue;
        const long dot = (x - a.first) * (b.first - a.first) + (y - a.second) * (b.second - a.second);
        const long len = (b.first - a.first) * (b.first - a.first) + (b.second - a.second) * (b.second - a.second);
        if (dot < 0 || dot > len) continue;
        ++out.points;
        if (dot > 0 && dot < len) ++out.interior;
      } else {
        bool inside = true, strict = true;
        for (std::size_t i = 0; i < hull.size(); ++i) {
          const long c = cross(hull[i], hull[(i + 1) % hull.size()], pt);
          if (c < 0) inside = false;
          if (c <= 0) strict = false;
        }
        if (inside) ++out.points;
        if (strict) ++out.interior;
      }
    }
  }
  return out;
}

// Toric profile over (F_P^*)^d, P = q+1, by evaluating monomials directly.
inline std::vector<std::uint64_t> toric_profile(const tuttekit::VectorConfig& c, std::uint64_t q) {
  const std::uint64_t P = q + 1;
  auto power = [P](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = r * b % P;
    return r;
  };
  auto inverse = [&](std::uint64_t b) { return power(b, P - 2); };
  std::vector<std::uint64_t> counts(c.size() + 1, 0);
  std::vector<std::uint64_t> point(c.dim, 1);
  while (true) {
    std::size_t h = 0;
    for (const auto& v : c.vectors) {
      std::uint64_t value = 1;
      for (std::size_t k = 0; k < c.dim; ++k) {
        const long e = v[k].get_si();
        const std::uint64_t base = e >= 0 ? point[k] : inverse(point[k]);
        value = value * power(base, static_cast<std::uint64_t>(e >= 0 ? e : -e)) % P;
      }
      h += value == 1;
    }
    ++counts[h];
    std::size_t k = 0;
    while (k < c.dim && ++point[k] == P) point[k++] = 1;
    if (k == c.dim) break;
  }
  return counts;
}

// (x-1)^{r - r(supp a)} (y-1)^r T(A(a)) against q^r Z~ at q = (x-1)(y-1) and
// w_e = weight(a_e), with T(A(a)) from the subset sum above.
template <class Weight>
bool thickening_part_one(const Arrangement& a, const std::vector<unsigned>& mult, Weight weight) {
  const tuttekit::MultivariateTutte mv = tuttekit::multivariate_tutte(a);
  std::uint64_t support = 0;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i]) support |= std::uint64_t{1} << i;
  const std::size_t r = mv.rank;
  const std::size_t rs = subset_data(a, support).second;
  const MultiPoly x1 = MultiPoly::variable("x") - MultiPoly(1), y1 = MultiPoly::variable("y") - MultiPoly(1);
  const MultiPoly lhs = x1.pow(static_cast<unsigned>(r - rs)) * y1.pow(static_cast<unsigned>(r)) *
                        tutte(tuttekit::thicken(a, mult));
  std::map<std::string, MultiPoly> subs{{"q", x1 * y1}};
  for (std::size_t i = 0; i < a.size(); ++i) subs[tuttekit::weight_variable(i)] = weight(mult[i]);
  return lhs == mv.poly.substitute(subs);
}

inline Arrangement make(std::size_t dim, std::initializer_list<std::pair<std::vector<long>, long>> rows) {
  std::vector<Hyperplane> hs;
  for (const auto& [normal, offset] : rows) {
    std::vector<Rational> n;
    for (long v : normal) n.emplace_back(v);
    hs.emplace_back(std::move(n), Rational(offset));
  }
  return Arrangement(dim, std::move(hs));
}

// x = 0, y = 0, x - y = 0, z = 0: the only dependent triple is the first three.
inline Arrangement fig1() {
  return make(3, {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{1, -1, 0}, 0}, {{0, 0, 1}, 0}});
}

}  // namespace oracle
