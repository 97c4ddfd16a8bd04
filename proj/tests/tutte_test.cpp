#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tuttekit/error.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/poset.hpp"
#include "tuttekit/tutte.hpp"

using namespace tuttekit;
using oracle::make;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

const char* kFig1Coboundary =
    "Y^4 + (X-1)*Y^3 + 3*(X-1)*Y^2 + (4*X^2-9*X+5)*Y + (X^3-4*X^2+5*X-2)";

Arrangement braid3() { return build_family(family(FamilyTag::braid, 3)); }

// A Tutte-Grothendieck invariant evaluated by its own recursion:
// f = a f(A\H) + b f(A/H) for ordinary H, f = c0 f(A/H) for a coloop and
// f = l0 f(A\H) for a loop.
Rational tg_invariant(const Arrangement& a, const Rational& ca, const Rational& cb, const Rational& c0,
                      const Rational& l0) {
  if (a.empty()) return 1;
  const std::size_t last = a.size() - 1;
  switch (classify(a, last)) {
    case ElementKind::loop:
      return l0 * tg_invariant(delete_hyperplane(a, last), ca, cb, c0, l0);
    case ElementKind::coloop:
      return c0 * tg_invariant(contract(a, last), ca, cb, c0, l0);
    case ElementKind::ordinary:
      return ca * tg_invariant(delete_hyperplane(a, last), ca, cb, c0, l0) +
             cb * tg_invariant(contract(a, last), ca, cb, c0, l0);
  }
  return 0;
}

std::vector<Arrangement> random_suite(std::uint64_t seed, int count, std::size_t max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Arrangement> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_arrangement(rng, max_n, 4, 3, i % 2 == 0));
  return out;
}

}  // namespace

TEST(Tutte, Fig1AllEngines) {
  const Arrangement a = oracle::fig1();
  const MultiPoly expected = P("x^3+x^2+x*y");
  EXPECT_EQ(tutte_subset(a).tutte, expected);
  EXPECT_EQ(tutte_delcon(a).tutte, expected);
  EXPECT_EQ(tutte_delcon(a, {.memoize = true}).tutte, expected);
  EXPECT_EQ(tutte_activity(a).first.tutte, expected);
  EXPECT_EQ(oracle::tutte(a), expected);
  EXPECT_EQ(tutte_subset(a).rank, 3u);
}

TEST(Tutte, SmallCases) {
  EXPECT_EQ(tutte_subset(Arrangement(3)).tutte, MultiPoly(1));
  EXPECT_EQ(tutte_delcon(Arrangement(3)).tutte, MultiPoly(1));
  EXPECT_EQ(tutte_activity(Arrangement(3)).first.tutte, MultiPoly(1));
  const Arrangement h2 = make(2, {{{1, 0}, 0}, {{0, 1}, 0}});
  EXPECT_EQ(tutte_subset(h2).tutte, P("x^2"));
  const Arrangement coloop = make(1, {{{1}, 0}});
  const Arrangement loop = make(1, {{{0}, 0}});
  EXPECT_EQ(tutte_delcon(coloop).tutte, P("x"));
  EXPECT_EQ(tutte_delcon(loop).tutte, P("y"));
  EXPECT_EQ(tutte_subset(loop).tutte, P("y"));
  const auto [res, cert] = tutte_activity(coloop);
  EXPECT_EQ(res.tutte, P("x"));
  ASSERT_EQ(cert.size(), 1u);
  EXPECT_EQ(cert[0].internal, 1u);
  EXPECT_EQ(cert[0].external, 0u);
  EXPECT_EQ(tutte_activity(braid3()).first.tutte, P("x^2+x+y"));
}

TEST(Tutte, Fig1Activities) {
  const Arrangement a = oracle::fig1();
  std::vector<std::size_t> order{0, 1, 2, 3};
  do {
    const auto [res, cert] = tutte_activity(a, order);
    EXPECT_EQ(res.tutte, P("x^3+x^2+x*y"));
    std::vector<IndexSet> bases;
    for (const auto& b : cert) bases.push_back(b.basis);
    std::sort(bases.begin(), bases.end());
    EXPECT_EQ(bases, (std::vector<IndexSet>{index_set({0, 1, 3}), index_set({0, 2, 3}), index_set({1, 2, 3})}));
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(Tutte, EnginesAgreeOnRandomArrangements) {
  for (const Arrangement& a : random_suite(101, 120, 8)) {
    const MultiPoly t = oracle::tutte(a);
    ASSERT_EQ(tutte_subset(a).tutte, t);
    ASSERT_EQ(tutte_delcon(a).tutte, t);
    ASSERT_EQ(tutte_delcon(a, {.memoize = true}).tutte, t);
    ASSERT_EQ(tutte_activity(a).first.tutte, t);
    // T(1,1) is the number of bases
    std::size_t bases = 0;
    const std::size_t r = rank(a);
    for (IndexSet s = 0; s < (IndexSet{1} << a.size()); ++s) {
      const auto [c, rb] = oracle::subset_data(a, s);
      bases += c && rb == r && static_cast<std::size_t>(popcount(s)) == r;
    }
    EXPECT_EQ(t.evaluate({{"x", 1}, {"y", 1}}), static_cast<long>(bases));
    EXPECT_LE(t.degree("x"), r);
  }
}

TEST(Tutte, ActivityOrderInvariance) {
  std::mt19937_64 rng(5);
  for (const Arrangement& a : random_suite(202, 40, 7)) {
    const MultiPoly t = tutte_subset(a).tutte;
    std::vector<std::size_t> order(a.size());
    std::iota(order.begin(), order.end(), 0);
    for (int k = 0; k < 20; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      ASSERT_EQ(tutte_activity(a, order).first.tutte, t);
    }
  }
}

TEST(Tutte, DeletionContractionIdentity) {
  for (const Arrangement& a : random_suite(303, 60, 7)) {
    const MultiPoly t = tutte_subset(a).tutte;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (classify(a, i) != ElementKind::ordinary) continue;
      EXPECT_EQ(t, tutte_subset(delete_hyperplane(a, i)).tutte + tutte_subset(contract(a, i)).tutte);
    }
  }
}

TEST(Tutte, Universality) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-4, 4);
  auto nonzero = [&] {
    int v = 0;
    while (v == 0) v = c(rng);
    return Rational(v);
  };
  for (const Arrangement& a : random_suite(404, 60, 6)) {
    // Contraction drops hyperplanes parallel to H, which changes n, so the
    // a^{n-r} factor only survives when nothing is ever dropped (central
    // arrangements) or when a = 1.
    const Rational ca = is_central(a) ? nonzero() : Rational(1);
    const Rational cb = nonzero(), c0 = nonzero(), l0 = nonzero();
    const TutteResult t = tutte_subset(a);
    const Rational closed = rpow(ca, static_cast<unsigned>(a.size() - t.rank)) * rpow(cb, t.rank) *
                            t.tutte.evaluate({{"x", c0 / cb}, {"y", l0 / ca}});
    EXPECT_EQ(closed, tg_invariant(a, ca, cb, c0, l0));
  }
}

TEST(Tutte, ScaledUniversalityNeedsCentrality) {
  // {x=0, x=1}: f = 2 f(x=0) + f(empty) = 2 c0 + 1, but 2^{n-r} T(c0, l0/2) = 2 c0 + 2
  const Arrangement a = make(1, {{{1}, 0}, {{1}, 1}});
  const Rational c0 = 3, l0 = 5;
  EXPECT_EQ(tg_invariant(a, 2, 1, c0, l0), 7);
  EXPECT_EQ(Rational(2) * tutte_subset(a).tutte.evaluate({{"x", c0}, {"y", l0 / 2}}), 8);
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(oracle::fig1()), P("q^3-4*q^2+5*q-2"));
  EXPECT_EQ(char_poly(braid3()), P("q*(q-1)*(q-2)"));
  EXPECT_EQ(char_poly(Arrangement(4)), P("q^4"));
  EXPECT_TRUE(char_poly(make(2, {{{0, 0}, 0}, {{1, 0}, 0}})).is_zero());
}

TEST(CharPoly, WhitneyAndPointCounts) {
  for (const Arrangement& a : random_suite(505, 80, 7)) {
    const TutteResult t = tutte_subset(a);
    const MultiPoly chi = char_poly_mobius(a);
    EXPECT_EQ(chi, char_poly_whitney(t.tutte, t.rank, a.dim()));
    // complement size over F_149; for d <= 2 every minor of the augmented
    // matrix is below 149 in absolute value
    if (a.dim() <= 2) EXPECT_EQ(chi.evaluate({{"q", 149}}), static_cast<long>(oracle::profile(a, 149)[0]));
  }
}

TEST(Coboundary, Examples) {
  const MultiPoly cob = coboundary_from_tutte(P("x^3+x^2+x*y"), 3);
  EXPECT_EQ(cob, P(kFig1Coboundary));
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_EQ(coboundary_from_tutte(P("x").pow(n), n), P("X+Y-1").pow(n));
  }
  EXPECT_EQ(coboundary_from_tutte(MultiPoly(1), 0), MultiPoly(1));
}

TEST(Coboundary, RoundTripAndEvaluations) {
  for (const Arrangement& a : random_suite(606, 80, 7)) {
    const TutteResult t = tutte_subset(a);
    const MultiPoly cob = coboundary_from_tutte(t.tutte, t.rank);
    EXPECT_EQ(tutte_from_coboundary(cob, t.rank), t.tutte);
    EXPECT_EQ(cob.substitute("Y", MultiPoly(1)), P("X").pow(static_cast<unsigned>(t.rank)));
    const MultiPoly chi = (P("X").pow(static_cast<unsigned>(a.dim() - t.rank)) * cob.substitute("Y", MultiPoly(0)))
                              .renamed({{"X", "q"}});
    EXPECT_EQ(chi, char_poly(a));
  }
}

TEST(Coboundary, InverseRejectsInconsistentInput) {
  EXPECT_THROW(tutte_from_coboundary(P("X^2+Y"), 1), Error);
}

TEST(Invariants, RegionCounts) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(scalar_invariants(build_family(family(FamilyTag::braid, n))).regions, factorial(n));
  }
  const ScalarInvariants shi = scalar_invariants(build_family(family(FamilyTag::shi, 3)));
  EXPECT_EQ(shi.regions, 16);
  EXPECT_EQ(shi.bounded_regions, 4);
  const ScalarInvariants cat = scalar_invariants(build_family(family(FamilyTag::catalan, 3)));
  EXPECT_EQ(cat.regions, 30);
  EXPECT_EQ(cat.bounded_regions, 12);
}

TEST(Invariants, Fields) {
  const ScalarInvariants s = scalar_invariants(oracle::fig1());
  EXPECT_EQ(s.regions, 12);
  EXPECT_EQ(s.bounded_regions, 0);
  EXPECT_EQ(s.poincare, P("1+4*q+5*q^2+2*q^3"));
  EXPECT_EQ(s.complement_size, P("q^3-4*q^2+5*q-2"));
  EXPECT_EQ(s.general_position_bounded, 2);
  ASSERT_TRUE(s.beta.has_value());
  EXPECT_EQ(*s.beta, 0);  // w is a coloop
  EXPECT_EQ(*s.beta_y, 0);
  const ScalarInvariants one = scalar_invariants(make(1, {{{1}, 0}}));
  EXPECT_FALSE(one.beta.has_value());
  EXPECT_FALSE(one.beta_y.has_value());
  const ScalarInvariants b = scalar_invariants(braid3());
  EXPECT_EQ(*b.beta, 1);
  EXPECT_EQ(*b.beta_y, 1);
}

TEST(Invariants, BetaSymmetricForCentralWithoutLoops) {
  for (const Arrangement& a : random_suite(707, 60, 7)) {
    if (!is_central(a) || a.size() < 2) continue;
    bool loop = false;
    for (const auto& h : a.hyperplanes()) loop = loop || h.is_loop();
    if (loop) continue;
    const ScalarInvariants s = scalar_invariants(a);
    EXPECT_EQ(*s.beta, *s.beta_y);
  }
}

TEST(ChiShape, Examples) {
  EXPECT_TRUE(validate_chi_shape(P("q^3-4*q^2+5*q-2")).ok());
  EXPECT_EQ(validate_chi_shape(P("q^3-4*q^2+5*q-2")).magnitudes,
            (std::vector<Integer>{1, 4, 5, 2}));
  EXPECT_TRUE(validate_chi_shape(P("q^3-3*q^2+2*q")).ok());
  EXPECT_TRUE(validate_chi_shape(P("q^5")).ok());
  const ChiShapeReport bad = validate_chi_shape(P("q^3+q^2+5*q-2"));
  EXPECT_FALSE(bad.alternating);
  const ChiShapeReport bumpy = validate_chi_shape(P("q^4-5*q^3+q^2-5*q+1"));
  EXPECT_FALSE(bumpy.log_concave);
  EXPECT_FALSE(bumpy.unimodal);
  EXPECT_FALSE(bumpy.violations.empty());
}

TEST(ChiShape, HoldsOnRandomArrangements) {
  for (const Arrangement& a : random_suite(808, 100, 7)) {
    const ChiShapeReport r = validate_chi_shape(char_poly(a));
    EXPECT_TRUE(r.ok()) << char_poly(a);
  }
}
