#include <gtest/gtest.h>

#include <random>

#include "tuttekit/error.hpp"
#include "tuttekit/interpolate.hpp"
#include "tuttekit/multipoly.hpp"
#include "tuttekit/rational.hpp"
#include "tuttekit/series.hpp"

using namespace tuttekit;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

MultiPoly random_poly(std::mt19937_64& rng) {
  static const char* names[] = {"x", "y", "q"};
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 2), count(0, 4), var(0, 2);
  MultiPoly p;
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i) {
    MultiPoly m(make_rational(coeff(rng), 1 + std::abs(coeff(rng))));
    for (int k = 0; k < 2; ++k) m *= MultiPoly::variable(names[var(rng)]).pow(deg(rng));
    p += m;
  }
  return p;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(parse_rational("+2/6"), Rational(1, 3));
  EXPECT_EQ(parse_rational("  -4/ 8"), Rational(-1, 2));
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  const Rational r = make_rational(10, -4);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(r.get_num(), -5);
}

TEST(Rational, ParseErrors) {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "--1"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::parse) << bad;
    }
  }
}

TEST(Rational, StaysReducedUnderArithmetic) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> v(-30, 30);
  for (int i = 0; i < 500; ++i) {
    const int d1 = v(rng), d2 = v(rng);
    if (d1 == 0 || d2 == 0) continue;
    const Rational a = make_rational(v(rng), d1), b = make_rational(v(rng), d2);
    EXPECT_EQ(make_rational(a.get_num() * 6, a.get_den() * 6), a);
    for (const Rational& r : {Rational(a + b), Rational(a * b), Rational(a - b)}) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
      EXPECT_EQ(g, 1);
      EXPECT_GT(r.get_den(), 0);
    }
  }
}

TEST(MultiPoly, ShiftedExpansion) {
  const MultiPoly x = MultiPoly::variable("x") - 1, y = MultiPoly::variable("y") - 1;
  const MultiPoly t = x.pow(3) + MultiPoly(4) * x.pow(2) + MultiPoly(6) * x + MultiPoly(3) + x * y + y;
  EXPECT_EQ(t.to_string(), "x^3 + x^2 + x*y");
  EXPECT_EQ(t, P("x^3+x^2+x*y"));
}

TEST(MultiPoly, MultiplicativeIdentity) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const MultiPoly p = random_poly(rng);
    EXPECT_EQ(p * MultiPoly(1), p);
  }
}

TEST(MultiPoly, SubstituteAndEvaluate) {
  const MultiPoly t = P("x^3+x^2+x*y");
  const MultiPoly s = t.substitute({{"x", P("1-q")}, {"y", MultiPoly(0)}});
  const MultiPoly expected = P("(1-q)^3+(1-q)^2");
  EXPECT_EQ(s, expected);
  for (int q = 0; q <= 3; ++q) {
    EXPECT_EQ(s.evaluate({{"q", q}}), expected.evaluate({{"q", q}}));
    const Rational u = 1 - q;
    EXPECT_EQ(s.evaluate({{"q", q}}), u * u * u + u * u);
  }
  EXPECT_EQ(s.evaluate({{"q", 2}}), 0);
}

TEST(MultiPoly, SubstituteUnknownVariable) {
  try {
    P("x^2+y").substitute("z", P("q"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_variable);
  }
}

TEST(MultiPoly, RingAxioms) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 200; ++i) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(MultiPoly, CanonicalText) {
  EXPECT_EQ(P("1/2*q - 3").to_string(), "1/2*q - 3");
  EXPECT_EQ(P("y*x + x^2 - x^2").to_string(), "x*y");
  EXPECT_EQ(P("-x").to_string(), "-x");
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_EQ(P("(X+Y-1)^2").to_string(), "X^2 + 2*X*Y + Y^2 - 2*X - 2*Y + 1");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const MultiPoly p = random_poly(rng);
    EXPECT_EQ(parse_poly(p.to_string()), p) << p;
  }
}

TEST(MultiPoly, ExactDivision) {
  const MultiPoly p = P("x^3 - 1");
  EXPECT_EQ(p.divide_by_linear("x", 1), P("x^2+x+1"));
  EXPECT_EQ(P("q^3 - 2*q^2").divide_by_power("q", 2), P("q-2"));
  EXPECT_THROW(p.divide_by_linear("x", 2), Error);
  EXPECT_THROW(P("q+1").divide_by_power("q", 1), Error);
}

TEST(Interpolate, Quadratic) {
  const std::vector<Sample> s{{2, MultiPoly(5)}, {3, MultiPoly(10)}, {4, MultiPoly(17)}};
  EXPECT_EQ(interpolate_in_X(s, 2), P("X^2+1"));
}

TEST(Interpolate, CoordinateCoboundary) {
  // sum_k c_k t^k over F_q^2 for H_2: (q-1)^2 + 2(q-1) t + t^2
  auto sample = [](long q) {
    return Sample{q, MultiPoly((q - 1) * (q - 1)) + MultiPoly(2 * (q - 1)) * P("Y") + P("Y^2")};
  };
  const MultiPoly expected = P("(X+Y-1)^2");
  EXPECT_EQ(interpolate_in_X({sample(2), sample(3), sample(5)}, 2), expected);
  EXPECT_EQ(interpolate_in_X({sample(2), sample(3), sample(5), sample(7)}, 2), expected);
}

TEST(Interpolate, Errors) {
  try {
    interpolate_in_X({{2, MultiPoly(1)}, {2, MultiPoly(1)}}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
  }
  try {
    interpolate_in_X({{1, MultiPoly(1)}, {2, MultiPoly(2)}, {3, MultiPoly(4)}}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::inconsistent);
  }
  EXPECT_THROW(interpolate_in_X({{1, MultiPoly(1)}}, 1), Error);
}

TEST(Interpolate, RecoversRandomPolynomials) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned bound = trial % 5;
    MultiPoly f;
    for (unsigned i = 0; i <= bound; ++i)
      for (unsigned j = 0; j < 3; ++j) f += MultiPoly::monomial(c(rng), {{"X", i}, {"Y", j}});
    std::vector<Sample> samples;
    for (long a = -2; a <= static_cast<long>(bound) + 1; ++a) {
      samples.push_back({a, f.with_variables({"X", "Y"}).substitute("X", MultiPoly(a))});
    }
    EXPECT_EQ(interpolate_in_X(samples, bound), f);
  }
}

TEST(Series, BinomialPower) {
  TruncatedSeries base(std::vector<MultiPoly>{1, 1, 0});
  const TruncatedSeries s = series_pow(base, P("X"));
  EXPECT_EQ(s[0], MultiPoly(1));
  EXPECT_EQ(s[1], P("X"));
  EXPECT_EQ(s[2], P("X*(X-1)/2"));
}

TEST(Series, DeformedExponentialAtYEqualsOne) {
  const TruncatedSeries f = deformed_exponential(MultiPoly(1), P("Y"), 3);
  const TruncatedSeries g = series_pow(f, P("X"));
  EXPECT_EQ(g[3].substitute("Y", MultiPoly(1)) * Rational(6), P("X^3"));
}

TEST(Series, ZerothPower) {
  const TruncatedSeries f = deformed_exponential(MultiPoly(1), P("Y"), 4);
  const TruncatedSeries g = series_pow(f, MultiPoly(0));
  EXPECT_EQ(g[0], MultiPoly(1));
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_TRUE(g[k].is_zero());
}

TEST(Series, ConstantTermMustBeOne) {
  EXPECT_THROW(series_pow(TruncatedSeries(std::vector<MultiPoly>{2, 1}), P("X")), Error);
  EXPECT_THROW(series_log(TruncatedSeries(std::vector<MultiPoly>{0, 1})), Error);
}

TEST(Series, PowerIsAdditiveInExponent) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<MultiPoly> coeffs{1};
    for (int k = 1; k <= 4; ++k) coeffs.push_back(MultiPoly(c(rng)) + MultiPoly(c(rng)) * P("Y"));
    const TruncatedSeries a(coeffs);
    const MultiPoly c1 = MultiPoly(c(rng)) * P("X") + MultiPoly(c(rng));
    const MultiPoly c2 = MultiPoly(Rational(c(rng), 2)) * P("X");
    EXPECT_EQ(series_pow(a, c1 + c2), series_pow(a, c1) * series_pow(a, c2));
  }
}

TEST(Series, LogExpInverse) {
  TruncatedSeries a(std::vector<MultiPoly>{1, P("Y"), P("X-2"), 3, P("X*Y")});
  EXPECT_EQ(series_exp(series_log(a)), a);
  EXPECT_EQ(a * series_inverse(a), TruncatedSeries(std::vector<MultiPoly>{1, 0, 0, 0, 0}));
}

TEST(Pochhammer, Examples) {
  const MultiPoly u = P("u");
  EXPECT_EQ(q_pochhammer(u, 2, 2), P("1-3*u+2*u^2"));
  EXPECT_EQ(q_pochhammer(P("a"), 7, 0), MultiPoly(1));
  EXPECT_EQ(q_pochhammer(u, 3, 3), P("(1-u)*(1-3*u)*(1-9*u)"));
  try {
    q_pochhammer(u, 2, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
  }
}

TEST(Pochhammer, QuotientSeriesAtIntegerX) {
  // for X = p^k the q-binomial sum terminates after u^k
  const TruncatedSeries s = pochhammer_quotient_series(MultiPoly(4), 2, 4);
  EXPECT_EQ(s[0], MultiPoly(1));
  EXPECT_EQ(s[1], MultiPoly(-3));  // (4-1) / (1-2)
  EXPECT_EQ(s[2], MultiPoly(2));   // (4-1)(4-2) / ((1-2)(1-4))
  EXPECT_TRUE(s[3].is_zero());
  EXPECT_TRUE(s[4].is_zero());
}
