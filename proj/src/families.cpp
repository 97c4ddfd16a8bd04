#include "tuttekit/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "tuttekit/arithmetic.hpp"
#include "tuttekit/error.hpp"
#include "tuttekit/linalg.hpp"
#include "tuttekit/series.hpp"
#include "tuttekit/tutte.hpp"

namespace tuttekit {

namespace {

const std::map<std::string, FamilyTag>& tag_table() {
  static const std::map<std::string, FamilyTag> table{
      {"coordinate", FamilyTag::coordinate}, {"braid", FamilyTag::braid},
      {"graphical", FamilyTag::graphical},   {"bc", FamilyTag::bc},
      {"dn", FamilyTag::dn},                 {"generic", FamilyTag::generic},
      {"catalan", FamilyTag::catalan},       {"shi", FamilyTag::shi},
      {"threshold", FamilyTag::threshold},   {"all_linear", FamilyTag::all_linear},
      {"thickened", FamilyTag::thickened}};
  return table;
}

Hyperplane linear(std::size_t dim, std::initializer_list<std::pair<std::size_t, long>> entries, long offset = 0) {
  std::vector<Rational> normal(dim, Rational(0));
  for (const auto& [i, v] : entries) normal[i] = v;
  return Hyperplane(std::move(normal), Rational(offset));
}

MultiPoly linear_product(const std::vector<Rational>& roots) {
  const MultiPoly q = MultiPoly::variable("q");
  MultiPoly out = MultiPoly::zero_in({"q"}) + MultiPoly(1);
  for (const auto& r : roots) out *= q - MultiPoly(r);
  return out;
}

std::size_t components(std::size_t vertices, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  std::size_t count = vertices;
  for (const auto& [a, b] : edges) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

std::size_t family_dim(const FamilySpec& spec) {
  if (spec.tag == FamilyTag::generic) return spec.d;
  if (spec.tag == FamilyTag::thickened) return family_dim(*spec.base);
  if (spec.tag == FamilyTag::graphical && spec.bipartite) return spec.m + spec.n;
  return spec.n;
}

// n! [Z^n] of a series, as a polynomial.
MultiPoly egf_coefficient(const TruncatedSeries& s, std::size_t n) {
  return s[n] * Rational(factorial(static_cast<unsigned>(n)));
}

// The point count X^{d-r} cob divided back to cob.
MultiPoly strip_X(const MultiPoly& count, std::size_t power) {
  return count.with_variables({"X", "Y"}).divide_by_power("X", static_cast<std::uint32_t>(power));
}

MultiPoly coordinate_tutte(std::size_t n) {
  return MultiPoly::variable("x").pow(static_cast<unsigned>(n)).with_variables({"x", "y"});
}

MultiPoly generic_tutte(std::size_t n, std::size_t d) {
  if (n <= d) return coordinate_tutte(n);
  MultiPoly t = MultiPoly::zero_in({"x", "y"});
  const MultiPoly x = MultiPoly::variable("x");
  const MultiPoly y = MultiPoly::variable("y");
  for (std::size_t i = 1; i <= d; ++i) {
    t += x.pow(static_cast<unsigned>(i)) * Rational(binomial(n - i - 1, n - d - 1));
  }
  for (std::size_t j = 1; j <= n - d; ++j) {
    t += y.pow(static_cast<unsigned>(j)) * Rational(binomial(n - j - 1, d - 1));
  }
  return t;
}

MultiPoly bipartite_coboundary(std::size_t m, std::size_t n) {
  if (m == 0 && n == 0) return MultiPoly::zero_in({"X", "Y"}) + MultiPoly(1);
  const std::size_t order = m + n;
  const MultiPoly Y = MultiPoly::variable("Y");
  const MultiPoly z1 = MultiPoly::variable("Z1");
  const MultiPoly z2 = MultiPoly::variable("Z2");
  TruncatedSeries base(order, "s");
  for (std::size_t a = 0; a <= order; ++a) {
    for (std::size_t b = 0; a + b <= order; ++b) {
      const Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned>(a)) *
                                                   factorial(static_cast<unsigned>(b)));
      base[a + b] += Y.pow(static_cast<unsigned>(a * b)) * z1.pow(static_cast<unsigned>(a)) *
                     z2.pow(static_cast<unsigned>(b)) * inv;
    }
  }
  const TruncatedSeries power = series_pow(base, MultiPoly::variable("X"));
  const MultiPoly top = power[order].with_variables({"Z1", "Z2"});
  const auto by_z1 = top.coefficients_in("Z1");
  if (m >= by_z1.size()) throw Error(ErrorCode::internal, "missing bipartite coefficient");
  const auto by_z2 = by_z1[m].coefficients_in("Z2");
  if (n >= by_z2.size()) throw Error(ErrorCode::internal, "missing bipartite coefficient");
  const MultiPoly coefficient = by_z2[n] * Rational(factorial(static_cast<unsigned>(m)) *
                                                    factorial(static_cast<unsigned>(n)));
  // The coefficient counts points, X^{#components} cob; K_{m,n} is connected
  // unless a side is empty.
  const std::size_t comps = (m == 0 || n == 0) ? m + n : 1;
  return strip_X(coefficient, comps);
}

MultiPoly all_linear_coboundary(std::uint64_t p, std::size_t n) {
  const Rational pr(Integer(static_cast<unsigned long>(p)));
  const MultiPoly X = MultiPoly::variable("X");
  const MultiPoly Y = MultiPoly::variable("Y");
  const TruncatedSeries quotient = pochhammer_quotient_series(X, pr, n, "u");
  TruncatedSeries tail(n, "u");
  for (std::size_t k = 0; k <= n; ++k) {
    // 1 + p + ... + p^{k-1}
    Integer exponent = 0;
    for (std::size_t i = 0; i < k; ++i) exponent += ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned>(i));
    const MultiPoly denom = q_pochhammer(MultiPoly(pr), pr, static_cast<long>(k));
    tail[k] = Y.pow(static_cast<unsigned>(to_int64(exponent))) / denom.constant_term();
  }
  const TruncatedSeries product = quotient * tail;
  const MultiPoly scale = q_pochhammer(MultiPoly(pr), pr, static_cast<long>(n));
  return (product[n] * scale.constant_term()).with_variables({"X", "Y"});
}

}  // namespace

const char* family_tag_name(FamilyTag tag) {
  for (const auto& [name, t] : tag_table()) {
    if (t == tag) return name.c_str();
  }
  return "unknown";
}

FamilyTag family_tag_from_name(const std::string& name) {
  const auto it = tag_table().find(name);
  if (it == tag_table().end()) throw Error(ErrorCode::parse, "unknown family '" + name + "'");
  return it->second;
}

std::string FamilySpec::describe() const {
  std::string s = family_tag_name(tag);
  switch (tag) {
    case FamilyTag::generic:
      return s + "(" + std::to_string(n) + "," + std::to_string(d) + ")";
    case FamilyTag::all_linear:
      return s + "(" + std::to_string(p) + "," + std::to_string(n) + ")";
    case FamilyTag::thickened:
      return s + "(" + base->describe() + "," + std::to_string(k) + ")";
    case FamilyTag::graphical:
      if (bipartite) return "K(" + std::to_string(m) + "," + std::to_string(n) + ")";
      return s + "(" + std::to_string(n) + " vertices," + std::to_string(edges.size()) + " edges)";
    default:
      return s + "(" + std::to_string(n) + ")";
  }
}

FamilySpec family(FamilyTag tag, std::size_t n) {
  FamilySpec s;
  s.tag = tag;
  s.n = n;
  return s;
}

FamilySpec generic_family(std::size_t n, std::size_t d) {
  FamilySpec s = family(FamilyTag::generic, n);
  s.d = d;
  return s;
}

FamilySpec graphical_family(std::size_t vertices, std::vector<Edge> edges) {
  FamilySpec s = family(FamilyTag::graphical, vertices);
  s.edges = std::move(edges);
  return s;
}

FamilySpec bipartite_family(std::size_t m, std::size_t n) {
  FamilySpec s = family(FamilyTag::graphical, n);
  s.m = m;
  s.bipartite = true;
  return s;
}

FamilySpec all_linear_family(std::uint64_t p, std::size_t n) {
  FamilySpec s = family(FamilyTag::all_linear, n);
  s.p = p;
  return s;
}

FamilySpec thickened_family(const FamilySpec& base, unsigned k) {
  FamilySpec s;
  s.tag = FamilyTag::thickened;
  s.k = k;
  s.base = std::make_shared<const FamilySpec>(base);
  return s;
}

std::vector<Edge> complete_bipartite_edges(std::size_t m, std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  }
  return edges;
}

Arrangement build_family(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  std::vector<Hyperplane> hs;
  auto pairs = [n](auto&& visit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) visit(i, j);
    }
  };
  switch (spec.tag) {
    case FamilyTag::coordinate:
      for (std::size_t i = 0; i < n; ++i) hs.push_back(linear(n, {{i, 1}}));
      break;
    case FamilyTag::braid:
      pairs([&](std::size_t i, std::size_t j) { hs.push_back(linear(n, {{i, 1}, {j, -1}})); });
      break;
    case FamilyTag::graphical: {
      const std::size_t vertices = family_dim(spec);
      const auto edges = (spec.bipartite) ? complete_bipartite_edges(spec.m, spec.n) : spec.edges;
      for (const auto& [a, b] : edges) {
        if (a >= vertices || b >= vertices) throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
        hs.push_back(a == b ? Hyperplane::loop(vertices) : linear(vertices, {{a, 1}, {b, -1}}));
      }
      return Arrangement(vertices, std::move(hs), spec.describe());
    }
    case FamilyTag::bc:
    case FamilyTag::dn:
      pairs([&](std::size_t i, std::size_t j) { hs.push_back(linear(n, {{i, 1}, {j, -1}})); });
      pairs([&](std::size_t i, std::size_t j) { hs.push_back(linear(n, {{i, 1}, {j, 1}})); });
      if (spec.tag == FamilyTag::bc) {
        for (std::size_t i = 0; i < n; ++i) hs.push_back(linear(n, {{i, 1}}));
      }
      break;
    case FamilyTag::generic: {
      const std::size_t d = spec.d;
      if (d == 0) throw Error(ErrorCode::invalid_argument, "generic arrangement needs d >= 1");
      // Vandermonde rows (1, c, c^2, ...) at distinct nodes c; any min(n,d) of
      // them are independent, which the loop below confirms.
      for (long shift = 0;; ++shift) {
        IntMatrix rows;
        for (std::size_t i = 1; i <= n; ++i) {
          std::vector<Integer> row;
          Integer v = 1;
          for (std::size_t k = 0; k < d; ++k) {
            row.push_back(v);
            v *= static_cast<long>(i) + shift;
          }
          rows.push_back(std::move(row));
        }
        bool general = true;
        const std::size_t m = std::min(n, d);
        for_each_subset(n, m, [&](const std::vector<std::size_t>& idx) {
          if (!general) return;
          IntMatrix sub;
          for (auto i : idx) sub.push_back(rows[i]);
          general = matrix_rank(sub) == m;
        });
        if (!general) continue;
        for (auto& row : rows) {
          std::vector<Rational> normal(row.begin(), row.end());
          hs.emplace_back(std::move(normal), Rational(0));
        }
        return Arrangement(d, std::move(hs), spec.describe());
      }
    }
    case FamilyTag::catalan:
      pairs([&](std::size_t i, std::size_t j) {
        for (long c : {-1L, 0L, 1L}) hs.push_back(linear(n, {{i, 1}, {j, -1}}, c));
      });
      break;
    case FamilyTag::shi:
      pairs([&](std::size_t i, std::size_t j) {
        for (long c : {0L, 1L}) hs.push_back(linear(n, {{i, 1}, {j, -1}}, c));
      });
      break;
    case FamilyTag::threshold:
      pairs([&](std::size_t i, std::size_t j) { hs.push_back(linear(n, {{i, 1}, {j, 1}})); });
      break;
    case FamilyTag::all_linear: {
      const std::uint64_t p = spec.p;
      if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "all_linear needs a prime p");
      if (n == 0) return Arrangement(0, {}, spec.describe(), p);
      const std::uint64_t total = to_int64(ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned>(n)));
      if (total > 100000) throw Error(ErrorCode::budget_exceeded, "all_linear arrangement too large");
      std::vector<std::uint64_t> v(n, 0);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t k = n; k-- > 0;) {
          v[k] = rest % p;
          rest /= p;
        }
        const auto lead = std::find_if(v.begin(), v.end(), [](std::uint64_t e) { return e != 0; });
        if (lead == v.end() || *lead != 1) continue;
        std::vector<Rational> normal;
        for (auto e : v) normal.emplace_back(Integer(static_cast<unsigned long>(e)));
        hs.emplace_back(std::move(normal), Rational(0), p);
      }
      return Arrangement(n, std::move(hs), spec.describe(), p);
    }
    case FamilyTag::thickened:
      if (!spec.base) throw Error(ErrorCode::invalid_argument, "thickened family needs a base");
      return thicken(build_family(*spec.base), spec.k).with_label(spec.describe());
  }
  return Arrangement(n, std::move(hs), spec.describe());
}

std::size_t family_rank(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  switch (spec.tag) {
    case FamilyTag::coordinate:
    case FamilyTag::bc:
      return n;
    case FamilyTag::braid:
    case FamilyTag::catalan:
    case FamilyTag::shi:
      return n == 0 ? 0 : n - 1;
    case FamilyTag::graphical: {
      const std::size_t vertices = family_dim(spec);
      const auto edges = (spec.bipartite) ? complete_bipartite_edges(spec.m, spec.n) : spec.edges;
      return vertices - components(vertices, edges);
    }
    case FamilyTag::dn:
      return n == 1 ? 0 : n;
    case FamilyTag::generic:
      return std::min(n, spec.d);
    case FamilyTag::threshold:
      return n <= 1 ? 0 : (n == 2 ? 1 : n);
    case FamilyTag::all_linear:
      return n;
    case FamilyTag::thickened:
      return family_rank(*spec.base);
  }
  return 0;
}

OracleResult oracle_char(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  std::vector<Rational> roots;
  std::string source;
  switch (spec.tag) {
    case FamilyTag::coordinate:
      roots.assign(n, Rational(1));
      source = "coordinate arrangement: (q-1)^n";
      break;
    case FamilyTag::braid:
      for (std::size_t k = 0; k < n; ++k) roots.emplace_back(static_cast<long>(k));
      source = "type A Coxeter arrangement";
      break;
    case FamilyTag::bc:
      for (std::size_t k = 1; k <= n; ++k) roots.emplace_back(static_cast<long>(2 * k - 1));
      source = "type BC Coxeter arrangement";
      break;
    case FamilyTag::dn:
      for (std::size_t k = 1; k + 1 <= n; ++k) roots.emplace_back(static_cast<long>(2 * k - 1));
      if (n >= 1) roots.emplace_back(static_cast<long>(n) - 1);
      source = "type D Coxeter arrangement";
      break;
    case FamilyTag::catalan:
      if (n >= 1) roots.emplace_back(0);
      for (std::size_t k = n + 1; k + 1 <= 2 * n; ++k) roots.emplace_back(static_cast<long>(k));
      source = "Catalan arrangement";
      break;
    case FamilyTag::shi:
      if (n >= 1) roots.emplace_back(0);
      for (std::size_t k = 1; k < n; ++k) roots.emplace_back(static_cast<long>(n));
      source = "Shi arrangement";
      break;
    case FamilyTag::all_linear:
      for (std::size_t k = 0; k < n; ++k) roots.emplace_back(ipow(Integer(static_cast<unsigned long>(spec.p)), static_cast<unsigned>(k)));
      source = "all linear hyperplanes over F_p";
      break;
    case FamilyTag::generic: {
      const MultiPoly chi = char_poly_whitney(generic_tutte(n, spec.d), std::min(n, spec.d), spec.d);
      return {OracleKind::char_poly, chi, "generic arrangement, from its Tutte polynomial"};
    }
    case FamilyTag::thickened: {
      OracleResult base = oracle_char(*spec.base);
      base.provenance = "thickening preserves the characteristic polynomial; " + base.provenance;
      return base;
    }
    case FamilyTag::graphical:
    case FamilyTag::threshold:
      throw Error(ErrorCode::invalid_argument,
                  std::string("no closed form for ") + family_tag_name(spec.tag) + "; use generating oracle or engines");
  }
  return {OracleKind::char_poly, linear_product(roots), source};
}

OracleResult oracle_tutte(const FamilySpec& spec) {
  switch (spec.tag) {
    case FamilyTag::coordinate:
      return {OracleKind::tutte, coordinate_tutte(spec.n), "coordinate arrangement: x^n"};
    case FamilyTag::generic:
      return {OracleKind::tutte, generic_tutte(spec.n, spec.d), "generic arrangement binomial formula"};
    case FamilyTag::thickened: {
      const OracleResult base = oracle_tutte(*spec.base);
      return {OracleKind::tutte, thickened_tutte(base.value, family_rank(*spec.base), spec.k),
              "uniform thickening of " + base.provenance};
    }
    default:
      throw Error(ErrorCode::invalid_argument,
                  std::string("no closed-form Tutte polynomial for ") + family_tag_name(spec.tag));
  }
}

OracleResult oracle_coboundary(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  const MultiPoly X = MultiPoly::variable("X");
  const MultiPoly Y = MultiPoly::variable("Y");
  const MultiPoly one(1);
  switch (spec.tag) {
    case FamilyTag::coordinate:
      return {OracleKind::coboundary, (X + Y - one).pow(static_cast<unsigned>(n)).with_variables({"X", "Y"}),
              "coordinate arrangement: (X+Y-1)^n"};
    case FamilyTag::generic:
      return {OracleKind::coboundary,
              coboundary_from_tutte(generic_tutte(n, spec.d), std::min(n, spec.d)),
              "generic arrangement binomial formula"};
    case FamilyTag::braid: {
      if (n == 0) return {OracleKind::coboundary, MultiPoly::zero_in({"X", "Y"}) + one, "empty arrangement"};
      const TruncatedSeries f = deformed_exponential(one, Y, n, "Z");
      return {OracleKind::coboundary, strip_X(egf_coefficient(series_pow(f, X), n), 1),
              "type A generating function F(Z,Y)^X"};
    }
    case FamilyTag::bc:
    case FamilyTag::dn: {
      const MultiPoly half = (X - one) / Rational(2);
      const TruncatedSeries head = series_pow(deformed_exponential(MultiPoly(2), Y, n, "Z"), half);
      const TruncatedSeries tail = spec.tag == FamilyTag::bc ? deformed_exponential(Y, Y * Y, n, "Z")
                                                             : deformed_exponential(one, Y * Y, n, "Z");
      const MultiPoly count = egf_coefficient(head * tail, n);
      return {OracleKind::coboundary, strip_X(count, n - family_rank(spec)),
              spec.tag == FamilyTag::bc ? "type BC generating function" : "type D generating function"};
    }
    case FamilyTag::threshold: {
      TruncatedSeries base(n, "Z");
      for (std::size_t r = 0; r <= n; ++r) {
        for (std::size_t s = 0; r + s <= n; ++s) {
          base[r + s] += Y.pow(static_cast<unsigned>(r * s)) /
                         Rational(factorial(static_cast<unsigned>(r)) * factorial(static_cast<unsigned>(s)));
        }
      }
      const TruncatedSeries series =
          series_pow(base, (X - one) / Rational(2)) * deformed_exponential(one, Y, n, "Z");
      return {OracleKind::coboundary, strip_X(egf_coefficient(series, n), n - family_rank(spec)),
              "threshold generating function"};
    }
    case FamilyTag::graphical:
      if (spec.bipartite) {
        return {OracleKind::coboundary, bipartite_coboundary(spec.m, spec.n),
                "complete bipartite generating function"};
      }
      throw Error(ErrorCode::invalid_argument, "no generating function for an arbitrary graph; use engines");
    case FamilyTag::all_linear:
      if (!is_prime(spec.p)) throw Error(ErrorCode::invalid_argument, "all_linear needs a prime p");
      return {OracleKind::coboundary, all_linear_coboundary(spec.p, n), "p-exponential generating function"};
    case FamilyTag::thickened: {
      const OracleResult base = oracle_coboundary(*spec.base);
      return {OracleKind::coboundary,
              base.value.substitute("Y", Y.pow(spec.k)).with_variables({"X", "Y"}),
              "thickening Y -> Y^k of " + base.provenance};
    }
    case FamilyTag::catalan:
    case FamilyTag::shi:
      throw Error(ErrorCode::invalid_argument,
                  std::string("no closed-form coboundary polynomial for ") + family_tag_name(spec.tag) + "; use engines");
  }
  throw Error(ErrorCode::internal, "unhandled family");
}

MultiPoly thickened_tutte(const MultiPoly& tutte, std::size_t rank, unsigned k) {
  const MultiPoly x = MultiPoly::variable("x");
  const MultiPoly y = MultiPoly::variable("y");
  MultiPoly s = MultiPoly::zero_in({"y"});
  for (unsigned i = 0; i < k; ++i) s += y.pow(i);
  const MultiPoly shifted = s - MultiPoly(1) + x;
  const MultiPoly t = tutte.with_variables({"x", "y"});
  MultiPoly out = MultiPoly::zero_in({"x", "y"});
  for (const auto& [e, c] : t.terms()) {
    if (e[0] > rank) throw Error(ErrorCode::inconsistent, "x-degree exceeds the rank");
    out += c * shifted.pow(e[0]) * s.pow(static_cast<unsigned>(rank - e[0])) * y.pow(k * e[1]);
  }
  return out;
}

bool thicken_identity_check(const Arrangement& a, unsigned k, const std::vector<unsigned>& multiplicities) {
  const TutteResult t = tutte_subset(a);
  const TutteResult tk = tutte_subset(thicken(a, k));
  const MultiPoly Y = MultiPoly::variable("Y");
  const MultiPoly lhs = coboundary_from_tutte(tk.tutte, tk.rank);
  const MultiPoly rhs = coboundary_from_tutte(t.tutte, t.rank).substitute("Y", Y.pow(k));
  if (lhs != rhs) return false;
  if (tk.tutte != thickened_tutte(t.tutte, t.rank, k)) return false;
  const std::vector<unsigned> mult = multiplicities.empty() ? std::vector<unsigned>(a.size(), k) : multiplicities;
  return thickening_tutte_check(a, mult);
}

}  // namespace tuttekit
