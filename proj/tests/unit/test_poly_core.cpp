#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rittforge/affine.hpp"
#include "rittforge/bipoly.hpp"
#include "rittforge/errors.hpp"
#include "rittforge/ratfun.hpp"
#include "support.hpp"

using namespace rittforge;
using rittforge::testing::G;
using rittforge::testing::P;

TEST(Rational, CanonicalForm) {
  const Rational r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), std::domain_error);
}

TEST(Rational, DecimalLiteralsAreExact) {
  EXPECT_EQ(Rational::parse("0.25"), Rational(mpz_class(1), mpz_class(4)));
  EXPECT_EQ(Rational::parse("-1.5e2"), Rational(-150));
  EXPECT_EQ(Rational::parse("3e-2"), Rational(mpz_class(3), mpz_class(100)));
  EXPECT_EQ(Rational::parse("2/-4"), Rational(mpz_class(-1), mpz_class(2)));
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.1).den(), mpz_class(1) << 55);
  EXPECT_EQ(Rational::from_double(-2.5), Rational(mpz_class(-5), mpz_class(2)));
}

TEST(Gaussian, ParseForms) {
  EXPECT_EQ(G("1/2+3/4 i"), Gaussian(Rational(mpz_class(1), mpz_class(2)), Rational(mpz_class(3), mpz_class(4))));
  EXPECT_EQ(G("-i"), Gaussian(Rational(0), Rational(-1)));
  EXPECT_EQ(G("2-i"), Gaussian(Rational(2), Rational(-1)));
  EXPECT_EQ(G("1e-1+2i"), Gaussian(Rational(mpz_class(1), mpz_class(10)), Rational(2)));
  EXPECT_EQ(G("7"), Gaussian(7));
}

TEST(Gaussian, ToStringRoundTrips) {
  for (const char* text : {"0", "-5/3", "1/2+3/4 i", "-1/2-1/3 i", "2 i"}) {
    const Gaussian g = G(text);
    EXPECT_EQ(Gaussian::parse(g.to_string()), g) << text;
  }
}

TEST(Gaussian, FieldAxiomsOnRandomTriples) {
  Sampler s(rittforge::testing::seed());
  for (int trial = 0; trial < 300; ++trial) {
    const Gaussian a = s.gaussian(), b = s.gaussian(), c = s.gaussian();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Gaussian(1));
    EXPECT_EQ(a - a, Gaussian(0));
  }
  EXPECT_THROW(Gaussian(0).inverse(), std::domain_error);
}

TEST(Gaussian, CanonicalOrderPrefersRealsThenSmallHeight) {
  EXPECT_TRUE(canonical_less(G("1"), G("i")));
  EXPECT_TRUE(canonical_less(G("1"), G("-1")));
  EXPECT_TRUE(canonical_less(G("2"), G("1/2")));
  EXPECT_FALSE(canonical_less(G("1"), G("1")));
}

TEST(Poly, ComposeExamples) {
  EXPECT_EQ(poly_compose(P("z^2"), P("z^3")), P("z^6"));
  EXPECT_EQ(poly_compose(P("z^2+1"), P("z+1")), P("z^2+2z+2"));
  EXPECT_EQ(poly_compose(Poly::constant(G("3/7")), P("z^5+z")), Poly::constant(G("3/7")));
}

TEST(Poly, EvalExamples) {
  EXPECT_EQ(poly_eval(P("z^2-1"), Gaussian(0)), Gaussian(-1));
  EXPECT_EQ(poly_eval(P("z^2-1"), Gaussian(-1)), Gaussian(0));
  EXPECT_EQ(poly_eval(P("z^2"), G("3/2")), G("9/4"));
}

TEST(Poly, CompositionIsAssociativeAndDegreeMultiplicative) {
  Sampler s(rittforge::testing::seed() + 1);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly p = s.poly(s.uniform(1, 3)), q = s.poly(s.uniform(1, 3)), r = s.poly(s.uniform(0, 2));
    EXPECT_EQ(poly_compose(poly_compose(p, q), r), poly_compose(p, poly_compose(q, r)));
    EXPECT_EQ(poly_compose(p, q).degree(), p.degree() * q.degree());
    // Pointwise oracle: (p∘q)(x) = p(q(x)).
    const Gaussian x = s.gaussian();
    EXPECT_EQ(poly_eval(poly_compose(p, q), x), poly_eval(p, poly_eval(q, x)));
  }
}

TEST(Poly, DivmodReconstructs) {
  Sampler s(rittforge::testing::seed() + 2);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = s.poly(s.uniform(0, 6)), b = s.poly(s.uniform(0, 3));
    const auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_EQ(Poly::gcd(P("(z-1)(z+2)"), P("(z-1)(z-3)")), P("z-1"));
}

TEST(Poly, ChebyshevMatchesCosineIdentity) {
  for (int n = 0; n <= 8; ++n) {
    const Poly t = chebyshev(n);
    for (double theta : {0.1, 0.7, 1.3, 2.9}) {
      EXPECT_NEAR(eval_complex(t, std::cos(theta)).real(), std::cos(n * theta), 1e-12) << "n = " << n;
    }
  }
  EXPECT_EQ(chebyshev(3), P("4z^3-3z"));
}

TEST(Poly, ParserPrecedence) {
  EXPECT_EQ(P("-z^2"), -P("z^2"));
  EXPECT_EQ(P("2z^3 - (1/2)z + i"), make_poly({G("i"), G("-1/2"), 0, 2}));
  EXPECT_EQ(P("(z+1)^2"), P("z^2+2z+1"));
  EXPECT_EQ(P("0.25*z"), make_poly({0, G("1/4")}));
  EXPECT_EQ(P("z/2"), make_poly({0, G("1/2")}));
  EXPECT_THROW(P("z/(z+1)"), ParseError);
  EXPECT_THROW(P("z^"), ParseError);
  EXPECT_THROW(P("(z+1"), ParseError);
  EXPECT_THROW(P("w"), ParseError);
}

TEST(Poly, ExpressionRoundTrip) {
  Sampler s(rittforge::testing::seed() + 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly p = s.poly(s.uniform(0, 5), 5, 4, 0.6);
    EXPECT_EQ(P(to_expression(p)), p) << to_expression(p);
  }
  EXPECT_EQ(to_expression(P("z^2-1")), "z^2 - 1");
  EXPECT_EQ(to_expression(P("i z")), "iz");
}

TEST(Affine, InverseExamples) {
  EXPECT_EQ(AffineMap(2, 1).inverse(), AffineMap(G("1/2"), G("-1/2")));
  EXPECT_EQ(AffineMap::identity().inverse(), AffineMap::identity());
  EXPECT_EQ(AffineMap(-1, 0).inverse(), AffineMap(-1, 0));
  EXPECT_THROW(AffineMap(0, 1), DomainError);
}

TEST(Affine, InverseComposesToIdentity) {
  Sampler s(rittforge::testing::seed() + 4);
  for (int trial = 0; trial < 50; ++trial) {
    const AffineMap a = s.affine();
    EXPECT_TRUE(compose(a, affine_inverse(a)).is_identity());
    EXPECT_TRUE(compose(affine_inverse(a), a).is_identity());
    const Poly p = s.poly(3);
    EXPECT_EQ(compose(a, p), poly_compose(a.as_poly(), p));
    EXPECT_EQ(compose(p, a), poly_compose(p, a.as_poly()));
  }
}

TEST(RatFun, CanonicalForm) {
  const RatFun r(P("2z^2-2"), P("2z+2"));
  EXPECT_EQ(r.num(), P("z-1"));
  EXPECT_EQ(r.den(), P("1"));
  EXPECT_TRUE(r.is_polynomial());
  const RatFun s(P("3"), P("2z"));
  EXPECT_EQ(s.den(), P("z"));
  EXPECT_EQ(s.num(), P("3/2"));
  EXPECT_THROW(RatFun(P("1"), Poly()), std::domain_error);
}

TEST(RatFun, EvalAndPoles) {
  const RatFun r(P("z+1"), P("z-1"));
  EXPECT_EQ(r.eval(Gaussian(3)), Gaussian(2));
  EXPECT_FALSE(r.eval(Gaussian(1)).has_value());
  EXPECT_EQ(r.value_at_infinity(), Gaussian(1));
  EXPECT_FALSE(RatFun(P("z^2")).value_at_infinity().has_value());
  EXPECT_EQ(RatFun(P("1"), P("z")).value_at_infinity(), Gaussian(0));
}

TEST(RatFun, CompositionMatchesPointwiseOracle) {
  Sampler s(rittforge::testing::seed() + 5);
  for (int trial = 0; trial < 40; ++trial) {
    const RatFun f = s.ratfun(3), g = s.ratfun(3);
    const RatFun fg = f.compose(g);
    const Gaussian x = s.gaussian(7, 5);
    const auto gx = g.eval(x);
    if (!gx) continue;
    const auto expected = f.eval(*gx);
    const auto got = fg.eval(x);
    if (expected && got) EXPECT_EQ(*got, *expected);
  }
}

TEST(RatFun, FieldOperations) {
  const RatFun z = RatFun::variable();
  const RatFun r = (z + RatFun(1)) / (z - RatFun(1));
  EXPECT_EQ(r * r.inverse(), RatFun(1));
  EXPECT_EQ(r - r, RatFun(0));
  EXPECT_EQ(r.inverse(), (z - RatFun(1)) / (z + RatFun(1)));
  EXPECT_EQ(to_expression(r), "(z + 1)/(z - 1)");
}

namespace {

BiPoly bipoly(std::initializer_list<RatFun> c) { return BiPoly(std::vector<RatFun>(c)); }

/// ∏ (W - a_k) for constants a_k.
BiPoly from_roots(const std::vector<Gaussian>& roots) {
  BiPoly f = bipoly({RatFun(1)});
  for (const auto& a : roots) f = f * bipoly({RatFun(-a), RatFun(1)});
  return f;
}

}  // namespace

TEST(Resultant, WorkedExamples) {
  const RatFun z = RatFun::variable();
  // W - z^2 against U - W - 1, with coefficients in U.
  const WUPoly g(std::vector<BiPoly>{bipoly({RatFun(-1), RatFun(1)}), bipoly({RatFun(-1)})});
  EXPECT_EQ(resultant_in_W(lift(bipoly({-(z * z), RatFun(1)})), g), bipoly({-(z * z) - RatFun(1), RatFun(1)}));
  // W - z against U - W^2.
  const WUPoly h(std::vector<BiPoly>{bipoly({RatFun(0), RatFun(1)}), BiPoly(), bipoly({RatFun(-1)})});
  EXPECT_EQ(resultant_in_W(lift(bipoly({-z, RatFun(1)})), h), bipoly({-(z * z), RatFun(1)}));
  // Shared root.
  EXPECT_EQ(resultant_in_W(bipoly({RatFun(0), RatFun(1)}), bipoly({RatFun(0), RatFun(1)})), RatFun(0));
  EXPECT_THROW(resultant_in_W(BiPoly(), bipoly({RatFun(1)})), DomainError);
}

TEST(Resultant, ProductOverRootsOracle) {
  // Res(f, g) = ∏ g(a_k) for monic f with roots a_k.
  Sampler s(rittforge::testing::seed() + 6);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Gaussian> roots;
    for (int k = s.uniform(1, 4); k > 0; --k) roots.push_back(s.gaussian());
    std::vector<RatFun> gc;
    const int dg = s.uniform(1, 4);
    for (int k = 0; k <= dg; ++k) gc.emplace_back(k == dg ? s.nonzero_gaussian() : s.gaussian());
    const BiPoly g(gc);
    Gaussian expected(1);
    for (const auto& a : roots) {
      Gaussian v;
      for (int k = dg; k >= 0; --k) v = v * a + *g.coeff(k).eval(Gaussian(0));
      expected *= v;
    }
    EXPECT_EQ(resultant_in_W(from_roots(roots), g), RatFun(expected));
  }
}

TEST(Resultant, RationalFunctionBranchesOracle) {
  // With f = ∏ (W - r_k(z)), Res_W(f, g) = ∏ g(r_k, U), and the cleared
  // elimination must agree with that product including denominators.
  Sampler s(rittforge::testing::seed() + 8);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<RatFun> branches;
    for (int k = s.uniform(1, 3); k > 0; --k) branches.push_back(s.ratfun(2));
    BiPoly f = bipoly({RatFun(1)});
    for (const RatFun& r : branches) f = f * bipoly({-r, RatFun(1)});
    std::vector<BiPoly> gc;
    const int dg = s.uniform(1, 3);
    for (int j = 0; j <= dg; ++j) gc.push_back(bipoly({s.ratfun(1), j == dg ? RatFun(s.nonzero_gaussian()) : s.ratfun(1)}));
    const WUPoly g(gc);
    BiPoly expected = bipoly({RatFun(1)});
    for (const RatFun& r : branches) {
      BiPoly value;
      for (int j = dg; j >= 0; --j) value = value * BiPoly::constant(r) + g.coeff(j);
      expected = expected * value;
    }
    EXPECT_EQ(resultant_in_W(lift(f), g), expected) << "trial " << trial;
    EXPECT_EQ(monic_resultant_in_W(lift(f), g), expected.monic()) << "trial " << trial;
  }
}

TEST(Resultant, VanishesExactlyOnCommonFactors) {
  Sampler s(rittforge::testing::seed() + 7);
  for (int trial = 0; trial < 20; ++trial) {
    const Gaussian shared = s.gaussian();
    const Gaussian a = s.gaussian(), b = s.gaussian();
    EXPECT_TRUE(resultant_in_W(from_roots({shared, a}), from_roots({b, shared})).is_zero());
    if (a != b) EXPECT_FALSE(resultant_in_W(from_roots({a}), from_roots({b})).is_zero());
  }
}

TEST(BiPoly, SpecializeAndDenominator) {
  const RatFun z = RatFun::variable();
  const BiPoly f = bipoly({RatFun(1) / z, z / (z + RatFun(1)), RatFun(1)});
  EXPECT_EQ(common_denominator(f), P("z^2+z"));
  EXPECT_FALSE(specialize(f, Gaussian(0)).has_value());
  EXPECT_EQ(*specialize(f, Gaussian(1)), make_poly({1, G("1/2"), 1}));
}
