#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tuttekit/error.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/tutte.hpp"

using namespace tuttekit;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

MultiPoly engine_coboundary(const Arrangement& a) {
  const TutteResult t = tutte_subset(a);
  return coboundary_from_tutte(t.tutte, t.rank);
}

MultiPoly falling(long n, long step, long start) {
  // prod_{i<n} (q - start - i*step)
  MultiPoly out(1);
  for (long i = 0; i < n; ++i) out *= P("q") - MultiPoly(start + i * step);
  return out;
}

Integer catalan_number(unsigned n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace

TEST(Build, Examples) {
  const Arrangement b = build_family(family(FamilyTag::braid, 3));
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0], Hyperplane({Rational(1), Rational(-1), Rational(0)}, Rational(0)));
  EXPECT_EQ(b[1], Hyperplane({Rational(1), Rational(0), Rational(-1)}, Rational(0)));
  EXPECT_EQ(b[2], Hyperplane({Rational(0), Rational(1), Rational(-1)}, Rational(0)));
  const Arrangement s = build_family(family(FamilyTag::shi, 3));
  EXPECT_EQ(s.size(), 6u);
  EXPECT_EQ(s.dim(), 3u);
  for (const auto& h : s.hyperplanes()) EXPECT_TRUE(h.offset() == 0 || h.offset() == 1);
  const Arrangement l = build_family(all_linear_family(2, 2));
  EXPECT_EQ(l.size(), 3u);
  EXPECT_EQ(l.characteristic(), 2u);
  EXPECT_EQ(build_family(all_linear_family(3, 3)).size(), 13u);
  EXPECT_EQ(build_family(family(FamilyTag::bc, 3)).size(), 9u);
  EXPECT_EQ(build_family(family(FamilyTag::dn, 3)).size(), 6u);
  EXPECT_EQ(build_family(family(FamilyTag::catalan, 3)).size(), 9u);
  EXPECT_EQ(build_family(family(FamilyTag::threshold, 4)).size(), 6u);
  EXPECT_EQ(build_family(thickened_family(family(FamilyTag::braid, 3), 2)).size(), 6u);
}

TEST(Build, Errors) {
  EXPECT_THROW(build_family(all_linear_family(4, 2)), Error);
  EXPECT_THROW(family_tag_from_name("e8"), Error);
  EXPECT_EQ(family_tag_from_name("all_linear"), FamilyTag::all_linear);
}

TEST(Build, GenericIsGeneric) {
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{4, 2}, {5, 2}, {5, 3}, {6, 3}, {6, 4}}) {
    const Arrangement a = build_family(generic_family(n, d));
    ASSERT_EQ(a.size(), n);
    for (IndexSet s = 0; s < (IndexSet{1} << n); ++s) {
      const auto [c, r] = oracle::subset_data(a, s);
      ASSERT_TRUE(c);
      EXPECT_EQ(r, std::min<std::size_t>(popcount(s), d));
    }
  }
}

TEST(OracleChar, Examples) {
  EXPECT_EQ(oracle_char(family(FamilyTag::braid, 4)).value, P("q*(q-1)*(q-2)*(q-3)"));
  EXPECT_EQ(oracle_char(family(FamilyTag::bc, 2)).value, P("(q-1)*(q-3)"));
  EXPECT_EQ(oracle_char(family(FamilyTag::catalan, 3)).value, P("q*(q-4)*(q-5)"));
  EXPECT_EQ(oracle_char(family(FamilyTag::shi, 3)).value, P("q*(q-3)^2"));
  EXPECT_EQ(oracle_char(family(FamilyTag::braid, 4)).kind, OracleKind::char_poly);
  EXPECT_FALSE(oracle_char(family(FamilyTag::braid, 4)).provenance.empty());
  try {
    oracle_char(family(FamilyTag::threshold, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
  }
  EXPECT_THROW(oracle_char(graphical_family(3, {{0, 1}})), Error);
}

TEST(OracleChar, MatchesEngines) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const FamilySpec s = family(FamilyTag::braid, n);
    EXPECT_EQ(char_poly(build_family(s)), oracle_char(s).value) << n;
    EXPECT_EQ(oracle_char(s).value, falling(n, 1, 0));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    for (FamilyTag tag : {FamilyTag::bc, FamilyTag::dn}) {
      const FamilySpec s = family(tag, n);
      EXPECT_EQ(char_poly(build_family(s)), oracle_char(s).value) << family_tag_name(tag) << n;
    }
    EXPECT_EQ(oracle_char(family(FamilyTag::bc, n)).value, falling(n, 2, 1));
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    for (FamilyTag tag : {FamilyTag::catalan, FamilyTag::shi, FamilyTag::coordinate}) {
      const FamilySpec s = family(tag, n);
      EXPECT_EQ(char_poly(build_family(s)), oracle_char(s).value) << family_tag_name(tag) << n;
    }
    EXPECT_EQ(oracle_char(family(FamilyTag::shi, n)).value,
              P("q") * (P("q") - MultiPoly(static_cast<long>(n))).pow(static_cast<unsigned>(n - 1)));
    EXPECT_EQ(oracle_char(family(FamilyTag::catalan, n)).value, P("q") * falling(n - 1, 1, n + 1));
  }
  for (auto [p, n] : {std::pair<std::uint64_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
    const FamilySpec s = all_linear_family(p, n);
    EXPECT_EQ(char_poly(build_family(s)), oracle_char(s).value);
    MultiPoly expected(1);
    for (std::size_t i = 0; i < n; ++i) expected *= P("q") - MultiPoly(ipow(p, i).get_si());
    EXPECT_EQ(oracle_char(s).value, expected);
  }
}

TEST(OracleCoboundary, TypeASmall) {
  EXPECT_EQ(oracle_coboundary(family(FamilyTag::braid, 2)).value, P("X+Y-1"));
  const MultiPoly a22 = oracle_coboundary(all_linear_family(2, 2)).value;
  EXPECT_EQ(a22.substitute("Y", MultiPoly(1)), P("X^2"));
  EXPECT_EQ(a22.substitute("Y", MultiPoly(0)), P("(X-1)*(X-2)"));
}

TEST(OracleCoboundary, MatchesEngines) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (FamilyTag tag : {FamilyTag::braid, FamilyTag::threshold}) {
      const FamilySpec s = family(tag, n);
      EXPECT_EQ(engine_coboundary(build_family(s)), oracle_coboundary(s).value) << family_tag_name(tag) << n;
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    for (FamilyTag tag : {FamilyTag::bc, FamilyTag::dn}) {
      const FamilySpec s = family(tag, n);
      EXPECT_EQ(engine_coboundary(build_family(s)), oracle_coboundary(s).value) << family_tag_name(tag) << n;
    }
  }
  for (std::size_t m = 0; m <= 5; ++m) {
    for (std::size_t n = 0; m + n <= 5; ++n) {
      if (m + n == 0) continue;
      const FamilySpec s = bipartite_family(m, n);
      EXPECT_EQ(engine_coboundary(build_family(s)), oracle_coboundary(s).value) << m << "," << n;
    }
  }
  for (auto [p, n] : {std::pair<std::uint64_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
    const FamilySpec s = all_linear_family(p, n);
    EXPECT_EQ(engine_coboundary(build_family(s)), oracle_coboundary(s).value) << p << "," << n;
  }
}

TEST(OracleCoboundary, AllLinearPointCounts) {
  // over F_p itself the profile is read off directly
  const FamilySpec s = all_linear_family(3, 2);
  const MultiPoly cob = oracle_coboundary(s).value;
  // F_3^2: origin on all 4 lines, every other point on exactly one
  EXPECT_EQ(cob.substitute("X", MultiPoly(3)), P("8*Y+Y^4"));
}

TEST(OracleTutte, Generic) {
  for (auto [n, d] : {std::pair<long, long>{4, 2}, {5, 2}, {5, 3}}) {
    MultiPoly expected;
    for (long i = 1; i <= d; ++i)
      expected += MultiPoly(binomial(n - i - 1, d - i)) * P("x").pow(static_cast<unsigned>(i));
    for (long j = 1; j <= n - d; ++j)
      expected += MultiPoly(binomial(n - j - 1, d - 1)) * P("y").pow(static_cast<unsigned>(j));
    const FamilySpec s = generic_family(n, d);
    const Arrangement a = build_family(s);
    EXPECT_EQ(tutte_subset(a).tutte, expected) << n << "," << d;
    EXPECT_EQ(oracle::tutte(a), expected);
    EXPECT_EQ(oracle_tutte(s).value, expected);
  }
  EXPECT_EQ(oracle_tutte(family(FamilyTag::coordinate, 4)).value, P("x^4"));
  EXPECT_THROW(oracle_tutte(family(FamilyTag::braid, 3)), Error);
}

TEST(Regions, Table) {
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(scalar_invariants(build_family(family(FamilyTag::braid, n))).regions, factorial(n));
  }
  for (unsigned n = 1; n <= 3; ++n) {
    EXPECT_EQ(scalar_invariants(build_family(family(FamilyTag::bc, n))).regions, ipow(2, n) * factorial(n));
    if (n >= 2) {
      EXPECT_EQ(scalar_invariants(build_family(family(FamilyTag::dn, n))).regions,
                ipow(2, n - 1) * factorial(n));
    }
  }
  for (unsigned n = 1; n <= 4; ++n) {
    const ScalarInvariants cat = scalar_invariants(build_family(family(FamilyTag::catalan, n)));
    EXPECT_EQ(cat.regions, factorial(n) * catalan_number(n));
    EXPECT_EQ(cat.bounded_regions, factorial(n) * catalan_number(n - 1));
    const ScalarInvariants shi = scalar_invariants(build_family(family(FamilyTag::shi, n)));
    EXPECT_EQ(shi.regions, ipow(n + 1, n - 1));
    EXPECT_EQ(shi.bounded_regions, ipow(n - 1, n - 1));
  }
}

TEST(Graphical, ChromaticPolynomial) {
  std::vector<std::pair<std::size_t, std::vector<Edge>>> graphs;
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<Edge> path, cycle;
    for (std::size_t i = 0; i + 1 < n; ++i) path.push_back({i, i + 1});
    cycle = path;
    if (n >= 3) cycle.push_back({n - 1, 0});
    graphs.push_back({n, path});
    graphs.push_back({n, cycle});
  }
  graphs.push_back({4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}});
  for (const auto& [n, edges] : graphs) {
    const Arrangement a = build_family(graphical_family(n, edges));
    const TutteResult t = tutte_subset(a);
    const MultiPoly cob = coboundary_from_tutte(t.tutte, t.rank);
    const MultiPoly chi =
        (P("X").pow(static_cast<unsigned>(n - t.rank)) * cob.substitute("Y", MultiPoly(0))).renamed({{"X", "q"}});
    EXPECT_EQ(chi, oracle::chromatic(n, edges)) << n << " vertices, " << edges.size() << " edges";
  }
  EXPECT_EQ(oracle::chromatic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), P("q*(q-1)*(q-2)*(q-3)"));
}

TEST(Graphical, SelfEdgeIsLoop) {
  const Arrangement a = build_family(graphical_family(2, {{0, 0}, {0, 1}}));
  EXPECT_TRUE(a[0].is_loop());
  EXPECT_EQ(tutte_subset(a).tutte, P("x*y"));
}

TEST(Thicken, Examples) {
  const Arrangement h1 = build_family(family(FamilyTag::coordinate, 1));
  EXPECT_EQ(tutte_subset(thicken(h1, 2)).tutte, P("x+y"));
  EXPECT_EQ(thickened_tutte(P("x"), 1, 2), P("x+y"));
  EXPECT_EQ(engine_coboundary(thicken(h1, 3)).degree("Y"), 3u);
  EXPECT_EQ(thicken(oracle::fig1(), 1).hyperplanes(), oracle::fig1().hyperplanes());
  EXPECT_TRUE(thicken_identity_check(oracle::fig1(), 1));
}

TEST(Thicken, CoboundaryIdentity) {
  const Arrangement braid = build_family(family(FamilyTag::braid, 3));
  for (const Arrangement& a : {braid, oracle::fig1()}) {
    const MultiPoly cob = engine_coboundary(a);
    for (unsigned k : {2u, 3u}) {
      EXPECT_EQ(engine_coboundary(thicken(a, k)), cob.substitute("Y", P("Y").pow(k)));
      EXPECT_EQ(tutte_subset(thicken(a, k)).tutte, thickened_tutte(tutte_subset(a).tutte, rank(a), k));
      EXPECT_TRUE(thicken_identity_check(a, k));
    }
  }
  EXPECT_TRUE(thicken_identity_check(oracle::fig1(), 2, {2, 1, 0, 3}));
}

TEST(Thicken, FamilyOracle) {
  const FamilySpec s = thickened_family(family(FamilyTag::braid, 3), 2);
  EXPECT_EQ(oracle_coboundary(s).value, engine_coboundary(build_family(s)));
  EXPECT_EQ(oracle_char(s).value, char_poly(build_family(s)));
  const FamilySpec g = thickened_family(generic_family(4, 2), 3);
  EXPECT_EQ(oracle_tutte(g).value, tutte_subset(build_family(g)).tutte);
}

TEST(FamilyRank, MatchesEngines) {
  std::vector<FamilySpec> specs;
  for (FamilyTag tag : {FamilyTag::coordinate, FamilyTag::braid, FamilyTag::bc, FamilyTag::dn, FamilyTag::catalan,
                        FamilyTag::shi, FamilyTag::threshold}) {
    for (std::size_t n = 1; n <= 4; ++n) specs.push_back(family(tag, n));
  }
  specs.push_back(bipartite_family(2, 3));
  specs.push_back(bipartite_family(0, 3));
  specs.push_back(generic_family(5, 3));
  specs.push_back(all_linear_family(3, 2));
  for (const FamilySpec& s : specs) EXPECT_EQ(family_rank(s), rank(build_family(s))) << s.describe();
}
