#include "tuttekit/arithmetic.hpp"

#include <functional>

#include "tuttekit/error.hpp"
#include "tuttekit/linalg.hpp"
#include "tuttekit/semimatroid.hpp"
#include "tuttekit/series.hpp"
#include "tuttekit/tutte.hpp"

namespace tuttekit {

namespace {

IntMatrix rows_of(const VectorConfig& c, IndexSet s) {
  IntMatrix m;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (s >> i & 1) m.push_back(c.vectors[i]);
  }
  return m;
}

IntMatrix columns_of(const VectorConfig& c, IndexSet s) {
  IntMatrix m(c.dim);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!(s >> i & 1)) continue;
    for (std::size_t k = 0; k < c.dim; ++k) m[k].push_back(c.vectors[i][k]);
  }
  return m;
}

void check_config(const VectorConfig& c) {
  if (c.size() > 24) throw Error(ErrorCode::budget_exceeded, "subset expansion needs at most 24 vectors");
  for (const auto& v : c.vectors) {
    if (v.size() != c.dim) throw Error(ErrorCode::invalid_argument, "vector length differs from dim");
  }
}

}  // namespace

std::size_t config_rank(const VectorConfig& c, IndexSet s) {
  const IntMatrix m = rows_of(c, s);
  return m.empty() ? 0 : matrix_rank(m);
}

std::size_t config_rank(const VectorConfig& c) { return config_rank(c, full_set(c.size())); }

Integer multiplicity(const VectorConfig& c, IndexSet s) {
  if (s == 0) return 1;
  return gcd_of_minors(columns_of(c, s), config_rank(c, s));
}

Integer multiplicity_smith(const VectorConfig& c, IndexSet s) {
  if (s == 0) return 1;
  Integer prod = 1;
  for (const auto& f : smith_invariants(columns_of(c, s))) prod *= f;
  return abs(prod);
}

MultiPoly arithmetic_tutte(const VectorConfig& c) {
  check_config(c);
  const std::size_t n = c.size();
  const std::size_t r = config_rank(c);
  std::vector<std::vector<Integer>> counts(r + 1, std::vector<Integer>(n + 1, 0));
  const IndexSet limit = IndexSet{1} << n;
  for (IndexSet s = 0; s < limit; ++s) {
    const std::size_t rb = config_rank(c, s);
    const Integer m = multiplicity(c, s);
    if (m != multiplicity_smith(c, s)) throw Error(ErrorCode::internal, "multiplicity routes disagree");
    counts[r - rb][popcount(s) - rb] += m;
  }
  return expand_shifted(counts);
}

MultiPoly arithmetic_char_poly(const MultiPoly& m, std::size_t rank, std::size_t dim) {
  return char_poly_whitney(m, rank, dim);
}

Arrangement central_arrangement(const VectorConfig& c) {
  std::vector<Hyperplane> hs;
  for (const auto& v : c.vectors) {
    std::vector<Rational> normal(v.begin(), v.end());
    hs.emplace_back(std::move(normal), Rational(0));
  }
  return Arrangement(c.dim, std::move(hs));
}

ZonotopeEvaluations zonotope_evaluations(const MultiPoly& m, std::size_t rank) {
  const MultiPoly mm = m.with_variables({"x", "y"});
  auto at = [&](long x) { return to_integer(mm.evaluate({{"x", Rational(x)}, {"y", Rational(1)}})); };
  ZonotopeEvaluations out;
  out.volume = at(1);
  out.lattice_points = at(2);
  out.interior_points = at(0);
  const MultiPoly q = MultiPoly::variable("q");
  const auto coeffs = mm.substitute("y", MultiPoly(1)).with_variables({"x"}).coefficients_in("x");
  MultiPoly e = MultiPoly::zero_in({"q"});
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > rank) throw Error(ErrorCode::inconsistent, "x-degree exceeds the rank");
    e += coeffs[i].constant_term() * (q + MultiPoly(1)).pow(static_cast<unsigned>(i)) *
         q.pow(static_cast<unsigned>(rank - i));
  }
  out.ehrhart = e;
  return out;
}

MultiPoly toric_profile_polynomial(const MultiPoly& m, std::size_t rank, std::size_t dim) {
  const MultiPoly q = MultiPoly::variable("q");
  const MultiPoly t = MultiPoly::variable("t");
  const MultiPoly shifted = q + t - MultiPoly(1);
  const MultiPoly tm1 = t - MultiPoly(1);
  MultiPoly out = MultiPoly::zero_in({"q", "t"});
  const MultiPoly mm = m.with_variables({"x", "y"});
  for (const auto& [e, c] : mm.terms()) {
    if (e[0] > rank) throw Error(ErrorCode::inconsistent, "x-degree exceeds the rank");
    out += c * shifted.pow(e[0]) * tm1.pow(static_cast<unsigned>(rank - e[0])) * t.pow(e[1]);
  }
  return out * q.pow(static_cast<unsigned>(dim - rank));
}

Integer multiplicity_lcm(const VectorConfig& c) {
  check_config(c);
  Integer out = 1;
  for (IndexSet s = 0; s < full_set(c.size()) + 1; ++s) out = lcm(out, multiplicity(c, s));
  return out;
}

ToricProfile toric_point_profile(const VectorConfig& c, std::uint64_t q, ProfileOptions options) {
  check_config(c);
  if (q == 0 || !is_prime(q + 1) || q + 1 > 0xffffffffULL) {
    throw Error(ErrorCode::bad_prime, "q+1 = " + std::to_string(q + 1) + " is not a usable prime");
  }
  // With a generator g, p_i = g^{k_i} lies on T_a iff a.k = 0 mod q, so the
  // count runs over (Z/q)^d with the vectors as normals.
  ModularArrangement m;
  m.p = q;
  m.dim = c.dim;
  m.n_hyperplanes = c.size();
  const Integer qq(static_cast<unsigned long>(q));
  for (const auto& v : c.vectors) {
    std::vector<std::uint32_t> normal;
    bool zero = true;
    for (const auto& entry : v) {
      Integer res = entry % qq;
      if (res < 0) res += qq;
      normal.push_back(static_cast<std::uint32_t>(res.get_ui()));
      zero = zero && normal.back() == 0;
    }
    if (zero) {
      ++m.loops;
    } else {
      m.normals.push_back(std::move(normal));
      m.offsets.push_back(0);
    }
  }
  const PointProfile raw = point_profile(m, options);
  ToricProfile out{q, raw.counts, false};
  if (qq % multiplicity_lcm(c) != 0) return out;
  out.checked = true;

  const MultiPoly mt = arithmetic_tutte(c);
  const std::size_t r = config_rank(c);
  const MultiPoly expected =
      toric_profile_polynomial(mt, r, c.dim).substitute("q", MultiPoly(Rational(qq))).with_variables({"t"});
  const MultiPoly got = profile_polynomial(raw, "t");
  if (expected != got) {
    throw Error(ErrorCode::internal, "toric point count " + got.to_string() + " differs from " + expected.to_string());
  }
  const Rational complement =
      arithmetic_char_poly(mt, r, c.dim).evaluate({{"q", Rational(qq)}});
  if (complement != Rational(Integer(static_cast<unsigned long>(out.counts[0])))) {
    throw Error(ErrorCode::internal, "toric complement count differs from the arithmetic characteristic polynomial");
  }
  return out;
}

std::string weight_variable(std::size_t index) { return "w_" + std::to_string(index + 1); }

MultivariateTutte multivariate_tutte(const Arrangement& a) {
  const SemimatroidTable table(a);
  const std::size_t n = a.size();
  const int r = table.full_rank();
  std::vector<std::string> vars{"q"};
  std::vector<MultiPoly> w;
  for (std::size_t i = 0; i < n; ++i) {
    vars.push_back(weight_variable(i));
    w.push_back(MultiPoly::variable(weight_variable(i)));
  }
  const MultiPoly q = MultiPoly::variable("q");
  MultiPoly out = MultiPoly::zero_in(vars);
  const IndexSet limit = IndexSet{1} << n;
  for (IndexSet s = 0; s < limit; ++s) {
    if (!table.central(s)) continue;
    MultiPoly term = q.pow(static_cast<unsigned>(r - table.rank(s)));
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1) term *= w[i];
    }
    out += term;
  }
  return {out, static_cast<std::size_t>(r), n};
}

bool multivariate_specialization_check(const MultivariateTutte& mv, const MultiPoly& tutte) {
  std::map<std::string, MultiPoly> all_w;
  const MultiPoly w = MultiPoly::variable("w");
  for (std::size_t i = 0; i < mv.n_hyperplanes; ++i) all_w[weight_variable(i)] = w;
  const MultiPoly lhs = mv.poly.substitute(all_w).with_variables({"q", "w"});
  const MultiPoly q = MultiPoly::variable("q");
  MultiPoly rhs = MultiPoly::zero_in({"q", "w"});
  const MultiPoly t = tutte.with_variables({"x", "y"});
  for (const auto& [e, c] : t.terms()) {
    if (e[0] > mv.rank) return false;
    rhs += c * (q + w).pow(e[0]) * w.pow(static_cast<unsigned>(mv.rank - e[0])) * (w + MultiPoly(1)).pow(e[1]);
  }
  return lhs == rhs;
}

Arrangement thicken(const Arrangement& a, const std::vector<unsigned>& multiplicities) {
  if (multiplicities.size() != a.size()) {
    throw Error(ErrorCode::invalid_argument, "need one multiplicity per hyperplane");
  }
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (unsigned k = 0; k < multiplicities[i]; ++k) hs.push_back(a[i]);
  }
  return Arrangement(a.dim(), std::move(hs), a.label(), a.characteristic());
}

Arrangement thicken(const Arrangement& a, unsigned k) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "thickening needs k >= 1");
  return thicken(a, std::vector<unsigned>(a.size(), k));
}

bool thickening_tutte_check(const Arrangement& a, const std::vector<unsigned>& multiplicities) {
  const MultivariateTutte mv = multivariate_tutte(a);
  const Arrangement thick = thicken(a, multiplicities);
  const TutteResult t = tutte_subset(thick);
  const MultiPoly x = MultiPoly::variable("x");
  const MultiPoly y = MultiPoly::variable("y");
  const MultiPoly lhs = (x - MultiPoly(1)).pow(static_cast<unsigned>(mv.rank - t.rank)) *
                        (y - MultiPoly(1)).pow(static_cast<unsigned>(mv.rank)) * t.tutte;
  std::map<std::string, MultiPoly> values{{"q", (x - MultiPoly(1)) * (y - MultiPoly(1))}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    values[weight_variable(i)] = y.pow(multiplicities[i]) - MultiPoly(1);
  }
  const MultiPoly rhs = mv.poly.substitute(values);
  return lhs.with_variables({"x", "y"}) == rhs.with_variables({"x", "y"});
}

bool thickening_series_check(const Arrangement& a, std::size_t order) {
  const std::size_t n = a.size();
  const MultivariateTutte mv = multivariate_tutte(a);
  const std::size_t r = mv.rank;
  const MultiPoly x = MultiPoly::variable("x");
  const MultiPoly y = MultiPoly::variable("y");
  const MultiPoly xm1 = x - MultiPoly(1);
  const MultiPoly ym1 = y - MultiPoly(1);
  std::vector<MultiPoly> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(MultiPoly::variable(weight_variable(i)));

  // geometric(c) = 1/(1 - c s) truncated
  auto geometric = [&](const MultiPoly& c) {
    TruncatedSeries g(order, "s");
    MultiPoly power(1);
    for (std::size_t k = 0; k <= order; ++k) {
      g[k] = power;
      power *= c;
    }
    return g;
  };
  TruncatedSeries one(order, "s");
  one[0] = MultiPoly(1);

  TruncatedSeries prefactor = one;
  for (std::size_t i = 0; i < n; ++i) prefactor = prefactor * geometric(w[i]);

  const SemimatroidTable table(a);
  TruncatedSeries sum(order, "s");
  const IndexSet limit = IndexSet{1} << n;
  for (IndexSet s = 0; s < limit; ++s) {
    if (!table.central(s)) continue;
    TruncatedSeries term = one * (xm1 * ym1).pow(static_cast<unsigned>(r - table.rank(s)));
    for (std::size_t i = 0; i < n; ++i) {
      if (!(s >> i & 1)) continue;
      TruncatedSeries factor = geometric(y * w[i]);
      TruncatedSeries shifted(order, "s");  // (y-1) w_i s / (1 - y w_i s)
      for (std::size_t k = 0; k < order; ++k) shifted[k + 1] = factor[k] * ym1 * w[i];
      term = term * shifted;
    }
    sum += term;
  }
  const TruncatedSeries rhs = prefactor * sum;

  TruncatedSeries lhs(order, "s");
  std::vector<unsigned> mult(n, 0);
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t i, std::size_t total) {
    if (i == n) {
      const Arrangement thick = thicken(a, mult);
      const TutteResult t = tutte_subset(thick);
      MultiPoly term = t.tutte * xm1.pow(static_cast<unsigned>(r - t.rank)) * ym1.pow(static_cast<unsigned>(r));
      for (std::size_t k = 0; k < n; ++k) term *= w[k].pow(mult[k]);
      lhs[total] += term;
      return;
    }
    for (std::size_t v = 0; total + v <= order; ++v) {
      mult[i] = static_cast<unsigned>(v);
      visit(i + 1, total + v);
    }
    mult[i] = 0;
  };
  visit(0, 0);
  for (std::size_t k = 0; k <= order; ++k) {
    if (lhs[k] != rhs[k]) return false;
  }
  return true;
}

}  // namespace tuttekit
