#include "tuttekit/tutte.hpp"

#include <map>
#include <numeric>

#include "tuttekit/error.hpp"

namespace tuttekit {

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::subset: return "subset";
    case Engine::delcon: return "delcon";
    case Engine::activity: return "activity";
    case Engine::finite_field: return "finite-field";
  }
  return "subset";
}

MultiPoly expand_shifted(const std::vector<std::vector<Integer>>& counts, const std::string& xv,
                         const std::string& yv) {
  // coefficient of x^a y^b = sum_{i>=a, j>=b} counts[i][j] C(i,a) C(j,b) (-1)^{i-a+j-b}
  MultiPoly out = MultiPoly::zero_in({xv, yv});
  const std::size_t ni = counts.size();
  std::size_t maxj = 0;
  for (const auto& row : counts) maxj = std::max(maxj, row.size());
  for (std::size_t a = 0; a < ni; ++a) {
    for (std::size_t b = 0; b < maxj; ++b) {
      Integer c = 0;
      for (std::size_t i = a; i < ni; ++i) {
        for (std::size_t j = b; j < counts[i].size(); ++j) {
          if (counts[i][j] == 0) continue;
          Integer term = counts[i][j] * binomial(i, a) * binomial(j, b);
          if ((i - a + j - b) % 2 == 1) term = -term;
          c += term;
        }
      }
      if (c != 0) {
        out += MultiPoly::monomial(Rational(c), {{xv, static_cast<std::uint32_t>(a)},
                                                 {yv, static_cast<std::uint32_t>(b)}});
      }
    }
  }
  return out;
}

TutteResult tutte_subset(const SemimatroidTable& table) {
  const std::size_t n = table.size();
  const int r = table.full_rank();
  std::vector<std::vector<Integer>> counts(r + 1, std::vector<Integer>(n + 1, 0));
  std::vector<std::vector<std::uint64_t>> fast(r + 1, std::vector<std::uint64_t>(n + 1, 0));
  const IndexSet limit = IndexSet{1} << n;
  for (IndexSet s = 0; s < limit; ++s) {
    if (!table.central(s)) continue;
    const int rb = table.rank(s);
    ++fast[r - rb][popcount(s) - rb];
  }
  for (int i = 0; i <= r; ++i) {
    for (std::size_t j = 0; j <= n; ++j) counts[i][j] = Integer(static_cast<unsigned long>(fast[i][j]));
  }
  return {expand_shifted(counts), static_cast<std::size_t>(r), n, Engine::subset};
}

TutteResult tutte_subset(const Arrangement& a) { return tutte_subset(SemimatroidTable(a)); }

namespace {

class Delcon {
 public:
  explicit Delcon(DelconOptions options) : options_(options) {}

  MultiPoly run(const Arrangement& a) {
    std::vector<std::pair<IndexSet, int>> key;
    if (options_.memoize && a.size() <= 16) {
      key = SemimatroidTable(a).fingerprint();
      key.emplace_back(static_cast<IndexSet>(a.size()), -1);  // disambiguates n
      const auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    MultiPoly t = compute(a);
    if (!key.empty()) cache_.emplace(std::move(key), t);
    return t;
  }

 private:
  MultiPoly compute(const Arrangement& a) {
    const MultiPoly x = MultiPoly::variable("x");
    const MultiPoly y = MultiPoly::variable("y");
    if (a.empty()) return MultiPoly::zero_in({"x", "y"}) + MultiPoly(1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_loop()) return y * run(delete_hyperplane(a, i));
    }
    const std::size_t r = rank(a);
    for (std::size_t i = a.size(); i-- > 0;) {
      if (rank(delete_hyperplane(a, i)) == r) {  // ordinary
        return run(delete_hyperplane(a, i)) + run(contract(a, i));
      }
    }
    return x.pow(static_cast<unsigned>(a.size()));
  }

  DelconOptions options_;
  std::map<std::vector<std::pair<IndexSet, int>>, MultiPoly> cache_;
};

}  // namespace

TutteResult tutte_delcon(const Arrangement& a, DelconOptions options) {
  Delcon engine(options);
  MultiPoly t = engine.run(a).with_variables({"x", "y"});
  return {std::move(t), rank(a), a.size(), Engine::delcon};
}

std::pair<TutteResult, ActivityCertificate> tutte_activity(const SemimatroidTable& table,
                                                           std::span<const std::size_t> order) {
  const std::size_t n = table.size();
  std::vector<std::size_t> position(n);
  if (order.empty()) {
    std::iota(position.begin(), position.end(), 0);
  } else {
    if (order.size() != n) throw Error(ErrorCode::invalid_argument, "order must list every hyperplane");
    std::vector<bool> seen(n, false);
    for (std::size_t k = 0; k < n; ++k) {
      if (order[k] >= n || seen[order[k]]) throw Error(ErrorCode::invalid_argument, "order is not a permutation");
      seen[order[k]] = true;
      position[order[k]] = k;
    }
  }
  std::vector<IndexSet> below(n, 0), above(n, 0);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t g = 0; g < n; ++g) {
      if (position[g] < position[h]) below[h] |= IndexSet{1} << g;
      if (position[g] > position[h]) above[h] |= IndexSet{1} << g;
    }
  }
  const int r = table.full_rank();
  ActivityCertificate cert;
  std::vector<std::vector<Integer>> monomials(n + 1, std::vector<Integer>(n + 1, 0));
  const IndexSet limit = IndexSet{1} << n;
  for (IndexSet b = 0; b < limit; ++b) {
    if (popcount(b) != r || !table.central(b) || table.rank(b) != r) continue;
    unsigned internal = 0, external = 0;
    for (std::size_t h = 0; h < n; ++h) {
      const IndexSet bit = IndexSet{1} << h;
      if (b & bit) {
        const IndexSet rest = b & ~bit;
        if (table.rank(rest | below[h]) == table.rank(rest) && table.rank(rest) == r - 1) ++internal;
      } else {
        const IndexSet later = b & above[h];
        if (table.central(b | bit) && table.rank(later | bit) == table.rank(later)) ++external;
      }
    }
    cert.push_back({b, internal, external});
    monomials[internal][external] += 1;
  }
  MultiPoly t = MultiPoly::zero_in({"x", "y"});
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (monomials[i][j] != 0) {
        t += MultiPoly::monomial(Rational(monomials[i][j]),
                                 {{"x", static_cast<std::uint32_t>(i)}, {"y", static_cast<std::uint32_t>(j)}});
      }
    }
  }
  return {TutteResult{std::move(t), static_cast<std::size_t>(r), n, Engine::activity}, std::move(cert)};
}

std::pair<TutteResult, ActivityCertificate> tutte_activity(const Arrangement& a,
                                                           std::span<const std::size_t> order) {
  return tutte_activity(SemimatroidTable(a), order);
}

MultiPoly char_poly_mobius(const Arrangement& a, const IntersectionPoset& poset) {
  MultiPoly chi = MultiPoly::zero_in({"q"});
  for (const auto& h : a.hyperplanes()) {
    if (h.is_loop()) return chi;
  }
  const MultiPoly q = MultiPoly::variable("q");
  for (std::size_t i = 0; i < poset.size(); ++i) {
    chi += q.pow(static_cast<unsigned>(poset.flats()[i].dim)) * Rational(poset.mobius(i));
  }
  return chi;
}

MultiPoly char_poly_mobius(const Arrangement& a) { return char_poly_mobius(a, intersection_poset(a)); }

MultiPoly char_poly_whitney(const MultiPoly& tutte, std::size_t rank, std::size_t dim) {
  const MultiPoly q = MultiPoly::variable("q");
  const MultiPoly t = tutte.with_variables({"x", "y"});
  MultiPoly chi = t.substitute({{"x", MultiPoly(1) - q}, {"y", MultiPoly(0)}}).with_variables({"q"});
  chi *= q.pow(static_cast<unsigned>(dim - rank));
  if (rank % 2 == 1) chi = -chi;
  return chi;
}

MultiPoly char_poly(const Arrangement& a) {
  const MultiPoly mobius = char_poly_mobius(a);
  const TutteResult t = tutte_subset(a);
  const MultiPoly whitney = char_poly_whitney(t.tutte, t.rank, a.dim());
  if (mobius != whitney) {
    throw Error(ErrorCode::internal, "Moebius and Whitney characteristic polynomials disagree: " +
                                         mobius.to_string() + " vs " + whitney.to_string());
  }
  return mobius;
}

MultiPoly coboundary_from_tutte(const MultiPoly& tutte, std::size_t rank) {
  const MultiPoly t = tutte.with_variables({"x", "y"});
  if (t.degree("x") > rank) {
    throw Error(ErrorCode::inconsistent, "Tutte polynomial has x-degree above the rank");
  }
  const MultiPoly X = MultiPoly::variable("X");
  const MultiPoly Y = MultiPoly::variable("Y");
  const MultiPoly shifted = X + Y - MultiPoly(1);
  const MultiPoly ym1 = Y - MultiPoly(1);
  MultiPoly out = MultiPoly::zero_in({"X", "Y"});
  for (const auto& [e, c] : t.terms()) {
    // variables of t are exactly {x, y}
    out += c * shifted.pow(e[0]) * ym1.pow(static_cast<unsigned>(rank - e[0])) * Y.pow(e[1]);
  }
  return out;
}

MultiPoly tutte_from_coboundary(const MultiPoly& coboundary, std::size_t rank) {
  const MultiPoly x = MultiPoly::variable("x");
  const MultiPoly y = MultiPoly::variable("y");
  MultiPoly t = coboundary.with_variables({"X", "Y"})
                    .substitute({{"X", (x - MultiPoly(1)) * (y - MultiPoly(1))}, {"Y", y}})
                    .with_variables({"x", "y"});
  for (std::size_t k = 0; k < rank; ++k) t = t.divide_by_linear("y", 1);
  return t;
}

ScalarInvariants scalar_invariants(const MultiPoly& tutte, const MultiPoly& chi, std::size_t dim,
                                   std::size_t rank, std::size_t n_hyperplanes) {
  const MultiPoly c = chi.with_variables({"q"});
  const MultiPoly t = tutte.with_variables({"x", "y"});
  ScalarInvariants out;
  Rational a = c.evaluate({{"q", Rational(-1)}});
  if (dim % 2 == 1) a = -a;
  out.regions = to_integer(a);
  Rational b = c.evaluate({{"q", Rational(1)}});
  if (rank % 2 == 1) b = -b;
  out.bounded_regions = to_integer(b);

  const MultiPoly q = MultiPoly::variable("q");
  MultiPoly poincare = MultiPoly::zero_in({"q"});
  for (const auto& [e, coeff] : c.terms()) {
    const std::uint32_t k = e[0];
    Rational v = coeff;
    if ((dim + k) % 2 == 1) v = -v;
    poincare += v * q.pow(static_cast<unsigned>(dim - k));
  }
  out.poincare = poincare;
  out.complement_size = c;
  out.general_position_bounded = to_integer(t.evaluate({{"x", Rational(1)}, {"y", Rational(0)}}));
  if (n_hyperplanes >= 2) {
    out.beta = to_integer(t.coefficient({{"x", 1}}));
    out.beta_y = to_integer(t.coefficient({{"y", 1}}));
  }
  return out;
}

ScalarInvariants scalar_invariants(const Arrangement& a) {
  const TutteResult t = tutte_subset(a);
  return scalar_invariants(t.tutte, char_poly(a), a.dim(), t.rank, a.size());
}

ChiShapeReport validate_chi_shape(const MultiPoly& chi, const std::string& variable) {
  ChiShapeReport report;
  if (chi.is_zero()) return report;
  const auto coeffs = chi.with_variables({variable}).coefficients_in(variable);
  const std::size_t top = coeffs.size() - 1;
  std::size_t low = 0;
  while (coeffs[low].is_zero()) ++low;
  for (std::size_t i = 0; i + low <= top; ++i) {
    const MultiPoly& c = coeffs[top - i];
    if (!c.is_constant()) throw Error(ErrorCode::invalid_argument, "characteristic polynomial must be univariate");
    Rational v = c.constant_term();
    if (i % 2 == 1) v = -v;
    if (v < 0) {
      report.alternating = false;
      report.violations.push_back("sign of coefficient a_" + std::to_string(i) + " breaks alternation");
    }
    if (!is_integer(v)) throw Error(ErrorCode::invalid_argument, "characteristic polynomial must be integral");
    report.magnitudes.push_back(v.get_num());
  }
  const auto& m = report.magnitudes;
  bool descending = false;
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] < m[i - 1]) descending = true;
    else if (m[i] > m[i - 1] && descending) {
      report.unimodal = false;
      report.violations.push_back("a_" + std::to_string(i) + " rises after a descent");
    }
  }
  for (std::size_t j = 1; j + 1 < m.size(); ++j) {
    if (m[j - 1] * m[j + 1] > m[j] * m[j]) {
      report.log_concave = false;
      report.violations.push_back("a_" + std::to_string(j - 1) + " a_" + std::to_string(j + 1) + " > a_" +
                                  std::to_string(j) + "^2");
    }
  }
  return report;
}

}  // namespace tuttekit
