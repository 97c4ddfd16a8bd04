#include "tuttekit/checks.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "tuttekit/arithmetic.hpp"
#include "tuttekit/error.hpp"
#include "tuttekit/poset.hpp"
#include "tuttekit/tutte.hpp"

namespace tuttekit {

namespace {

CheckResult compare(const std::string& name, const MultiPoly& got, const MultiPoly& expected) {
  if (got == expected) return {name, true, {}};
  return {name, false, got.to_string() + " != " + expected.to_string()};
}

CheckResult verdict(const std::string& name, bool ok, const std::string& detail = {}) {
  return {name, ok, ok ? std::string() : detail};
}

template <class F>
void guarded(std::vector<CheckResult>& out, const std::string& name, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    out.push_back({name, false, std::string(error_code_name(e.code())) + ": " + e.what()});
  }
}

}  // namespace

CheckResult check_profile_slices(const PointProfile& profile, std::size_t dim, const MultiPoly& chi) {
  const Rational p(Integer(static_cast<unsigned long>(profile.p)));
  const Rational total = rpow(p, static_cast<unsigned>(dim));
  Integer sum = 0;
  for (auto c : profile.counts) sum += static_cast<unsigned long>(c);
  const std::string name = "profile slices p=" + std::to_string(profile.p);
  if (Rational(sum) != total) return {name, false, "counts sum to " + to_string(sum)};
  const MultiPoly poly = profile_polynomial(profile, "t");
  if (poly.evaluate({{"t", Rational(1)}}) != total) return {name, false, "t=1 slice differs from p^d"};
  const Rational complement = chi.with_variables({"q"}).evaluate({{"q", p}});
  const Rational at_zero = profile.counts.empty() ? Rational(0) : Rational(Integer(static_cast<unsigned long>(profile.counts[0])));
  if (at_zero != complement) {
    return {name, false, "t=0 slice " + to_string(at_zero) + " differs from chi(p) = " + to_string(complement)};
  }
  return {name, true, {}};
}

std::vector<CheckResult> check_arrangement(const Arrangement& a, const CheckOptions& options) {
  std::vector<CheckResult> out;
  const std::size_t n = a.size();
  if (n > SemimatroidTable::max_hyperplanes) {
    out.push_back({"size", false, "subset-based checks need at most 24 hyperplanes"});
    return out;
  }
  const SemimatroidTable table(a);
  const TutteResult subset = tutte_subset(table);
  const MultiPoly& t = subset.tutte;
  const std::size_t r = subset.rank;

  guarded(out, "delcon = subset", [&] { out.push_back(compare("delcon = subset", tutte_delcon(a).tutte, t)); });
  guarded(out, "activity = subset", [&] {
    const auto [act, cert] = tutte_activity(table);
    out.push_back(compare("activity = subset", act.tutte, t));
    Integer bases = 0;
    const IndexSet limit = IndexSet{1} << n;
    for (IndexSet s = 0; s < limit; ++s) {
      if (popcount(s) == static_cast<int>(r) && table.central(s) && table.rank(s) == static_cast<int>(r)) ++bases;
    }
    const Rational t11 = t.evaluate({{"x", Rational(1)}, {"y", Rational(1)}});
    out.push_back(verdict("T(1,1) = #bases", t11 == Rational(bases) && cert.size() == bases,
                          "T(1,1) = " + to_string(t11) + ", bases = " + to_string(bases)));
  });
  guarded(out, "activity order invariance", [&] {
    std::mt19937_64 rng(options.seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    bool ok = true;
    std::string detail;
    for (unsigned i = 0; i < options.permutations && ok; ++i) {
      std::shuffle(order.begin(), order.end(), rng);
      const MultiPoly got = tutte_activity(table, order).first.tutte;
      if (got != t) {
        ok = false;
        detail = got.to_string();
      }
    }
    out.push_back(verdict("activity order invariance", ok, detail));
  });
  guarded(out, "deletion-contraction identity", [&] {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (classify(a, i) != ElementKind::ordinary) continue;
      const MultiPoly sum = tutte_subset(delete_hyperplane(a, i)).tutte + tutte_subset(contract(a, i)).tutte;
      if (sum != t) {
        ok = false;
        detail = "hyperplane " + std::to_string(i);
      }
    }
    out.push_back(verdict("deletion-contraction identity", ok, detail));
  });

  MultiPoly chi;
  guarded(out, "Whitney", [&] {
    const IntersectionPoset poset = intersection_poset(a);
    chi = char_poly_mobius(a, poset);
    out.push_back(compare("Whitney", char_poly_whitney(t, r, a.dim()), chi));
    bool ok = true;
    for (std::size_t g = 0; g < poset.size(); ++g) {
      long sum = 0;
      for (std::size_t f = 0; f < poset.size(); ++f) {
        if (poset.leq(f, g)) sum += poset.mobius(f);
      }
      ok = ok && sum == (g == 0 ? 1 : 0);
    }
    out.push_back(verdict("Moebius recursion", ok, "sum over an interval is nonzero"));
    const ChiShapeReport shape = validate_chi_shape(chi);
    std::string detail;
    for (const auto& v : shape.violations) detail += (detail.empty() ? "" : "; ") + v;
    out.push_back(verdict("chi signs and log-concavity", shape.ok(), detail));
  });

  MultiPoly cob;
  guarded(out, "coboundary round trip", [&] {
    cob = coboundary_from_tutte(t, r);
    out.push_back(compare("coboundary round trip", tutte_from_coboundary(cob, r), t));
    const MultiPoly X = MultiPoly::variable("X");
    out.push_back(compare("cob(X,1) = X^r", cob.substitute("Y", MultiPoly(1)), X.pow(static_cast<unsigned>(r))));
    const MultiPoly slice =
        (cob.substitute("Y", MultiPoly(0)) * X.pow(static_cast<unsigned>(a.dim() - r))).renamed({{"X", "q"}});
    out.push_back(compare("X^{d-r} cob(X,0) = chi", slice, chi));
  });

  guarded(out, "multivariate specialization", [&] {
    out.push_back(verdict("multivariate specialization",
                          multivariate_specialization_check(multivariate_tutte(a), t)));
  });

  if (options.finite_field && a.characteristic() == 0) {
    guarded(out, "finite field method", [&] {
      FfmOptions ffm;
      ffm.budget = options.budget;
      ffm.threads = options.threads;
      const FfmResult res = coboundary_ffm(a, ffm);
      out.push_back(compare("finite field method", res.coboundary, cob));
      for (const auto& profile : res.profiles) out.push_back(check_profile_slices(profile, a.dim(), chi));
    });
  }
  return out;
}

std::vector<CheckResult> check_family(const FamilySpec& spec, const CheckOptions& options) {
  const Arrangement a = build_family(spec);
  std::vector<CheckResult> out = check_arrangement(a, options);
  const TutteResult t = tutte_subset(a);
  auto try_oracle = [&](const std::string& name, auto&& oracle, auto&& engine) {
    try {
      const OracleResult o = oracle();
      out.push_back(compare(name + " (" + o.provenance + ")", engine(), o.value));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::invalid_argument) {
        out.push_back({name, false, std::string(error_code_name(e.code())) + ": " + e.what()});
      }
    }
  };
  try_oracle("oracle chi", [&] { return oracle_char(spec); }, [&] { return char_poly_mobius(a); });
  try_oracle("oracle coboundary", [&] { return oracle_coboundary(spec); },
             [&] { return coboundary_from_tutte(t.tutte, t.rank); });
  try_oracle("oracle tutte", [&] { return oracle_tutte(spec); }, [&] { return t.tutte; });
  out.push_back(verdict("rank formula", family_rank(spec) == t.rank,
                        std::to_string(family_rank(spec)) + " vs " + std::to_string(t.rank)));
  return out;
}

}  // namespace tuttekit
