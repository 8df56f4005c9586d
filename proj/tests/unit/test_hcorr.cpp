#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "rittforge/errors.hpp"
#include "rittforge/hcorr.hpp"
#include "support.hpp"

using namespace rittforge;
using rittforge::testing::G;
using rittforge::testing::P;

namespace {

using cd = std::complex<double>;

RatFun R(std::string_view expr) { return RatFun(P(expr)); }
RatFun R(std::string_view num, std::string_view den) { return RatFun(P(num), P(den)); }

// Builds a BiPoly from ascending W-coefficients.
BiPoly W(std::vector<RatFun> coeffs) { return BiPoly(std::move(coeffs)); }

// Exact value of k.poly at (z0, w0); nullopt when z0 is a pole of a coefficient.
std::optional<Gaussian> value_at(const HolCorr& k, const Gaussian& z0, const Gaussian& w0) {
  const auto specialized = specialize(k.poly(), z0);
  if (!specialized) return std::nullopt;
  return (*specialized)(w0);
}

// Monic polynomial with the given roots, ascending coefficients.
std::vector<cd> from_roots(const std::vector<cd>& roots) {
  std::vector<cd> c{1.0};
  for (const cd& r : roots) {
    std::vector<cd> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

bool contains_near(const std::vector<cd>& values, cd target, double tol) {
  return std::any_of(values.begin(), values.end(), [&](cd v) { return std::abs(v - target) <= tol; });
}

}  // namespace

TEST(FromBranches, Examples) {
  EXPECT_EQ(graph(R("z^2")).poly(), W({R("-z^2"), R("1")}));
  EXPECT_EQ(from_branches({R("z"), R("-z")}).poly(), W({R("-z^2"), R("0"), R("1")}));
  // e1 = z + 1 + 1/z = (z^2+z+1)/z and e2 = (z+1)/z.
  const HolCorr k = from_branches({R("z+1"), R("1", "z")});
  EXPECT_EQ(k.poly(), W({R("z+1", "z"), -R("z^2+z+1", "z"), R("1")}));
  EXPECT_EQ(k.degree(), 2);
}

TEST(FromBranches, GraphsOfSimpleMaps) {
  EXPECT_EQ(graph(R("z")).poly(), W({R("-z"), R("1")}));
  EXPECT_EQ(graph(R("7")).poly(), W({R("-7"), R("1")}));
  EXPECT_EQ(graph(R("z^3+1")).degree(), 1);
}

TEST(FromBranches, EmptyListIsRejected) { EXPECT_THROW(from_branches({}), DomainError); }

TEST(FromBranches, CoefficientsAreSignedElementarySymmetricFunctions) {
  Sampler s(rittforge::testing::seed());
  for (int trial = 0; trial < 10; ++trial) {
    const int d = s.uniform(1, 4);
    std::vector<RatFun> b;
    for (int i = 0; i < d; ++i) b.push_back(s.ratfun(2));
    // e_k by the recurrence E_k(b_1..b_m) = E_k(b_1..b_{m-1}) + b_m E_{k-1}(b_1..b_{m-1}).
    std::vector<RatFun> e(static_cast<std::size_t>(d) + 1, RatFun(0));
    e[0] = RatFun(1);
    for (const RatFun& r : b) {
      for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] = e[k] + r * e[k - 1];
    }
    const HolCorr h = from_branches(b);
    ASSERT_EQ(h.degree(), d);
    for (int i = 1; i <= d; ++i) {
      const RatFun expected = (i % 2 == 0) ? e[static_cast<std::size_t>(i)] : -e[static_cast<std::size_t>(i)];
      EXPECT_EQ(h.poly().coeff(d - i), expected) << "trial " << trial << " i " << i;
    }
  }
}

TEST(HolCorr, NormalizesToMonicAndRejectsDegreeZero) {
  const HolCorr k(W({R("2z"), R("2")}));
  EXPECT_EQ(k.poly(), W({R("z"), R("1")}));
  EXPECT_THROW(HolCorr{W({R("z")})}, DomainError);
  EXPECT_THROW(HolCorr{BiPoly()}, DomainError);
}

TEST(Compose, ResultantExample) {
  const HolCorr k = compose(graph(R("z+1")), graph(R("z^2")));
  EXPECT_EQ(k, graph(R("z^2+1")));
}

TEST(Compose, OrderIsSecondAfterFirst) {
  EXPECT_EQ(compose(graph(R("z^2")), graph(R("z+1"))), graph(R("z^2+2z+1")));
}

TEST(Compose, IdentityLaws) {
  const HolCorr id = graph(RatFun::variable());
  const std::vector<HolCorr> samples{graph(R("z^2-1")), from_branches({R("z"), R("-z")}),
                                     HolCorr(W({R("-z"), R("0"), R("1")})), from_branches({R("z+1"), R("1", "z")})};
  for (const HolCorr& k : samples) {
    EXPECT_EQ(compose(k, id), k);
    EXPECT_EQ(compose(id, k), k);
  }
}

TEST(Compose, GraphsComposeLikeMaps) {
  Sampler s(rittforge::testing::seed() + 1);
  for (int trial = 0; trial < 12; ++trial) {
    const RatFun f = s.ratfun(s.uniform(1, 3));
    const RatFun g = s.ratfun(s.uniform(1, 3));
    if (f.is_constant() || g.is_constant()) continue;
    EXPECT_EQ(compose(graph(f), graph(g)), graph(f.compose(g)))
        << to_expression(f) << " after " << to_expression(g);
  }
}

TEST(Compose, FibersComposeAtRationalPoints) {
  // u is in the composed fiber of z whenever z -> w -> u through the factors.
  const HolCorr sqrt_corr(W({R("-z"), R("0"), R("1")}));  // W^2 = z
  const HolCorr k1 = from_branches({R("z+1"), R("2z")});
  const HolCorr k = compose(sqrt_corr, k1);
  EXPECT_EQ(k.degree(), 4);
  // At z = 1 both branches give w = 2, so the roots are double and only
  // accurate to about the square root of machine precision.
  for (const char* point : {"1", "3", "-2", "1/2"}) {
    const Gaussian z0 = G(point);
    for (const Gaussian& w : {z0 + Gaussian(1), Gaussian(2) * z0}) {
      const auto fib = fiber(k, z0.to_complex());
      const cd root = std::sqrt(w.to_complex());
      EXPECT_TRUE(contains_near(fib, root, 1e-6)) << point;
      EXPECT_TRUE(contains_near(fib, -root, 1e-6)) << point;
    }
  }
}

TEST(Compose, DegreeIsAtMostTheProduct) {
  Sampler s(rittforge::testing::seed() + 2);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<RatFun> b1, b2;
    for (int i = s.uniform(1, 2); i > 0; --i) b1.push_back(s.ratfun(2));
    for (int i = s.uniform(1, 3); i > 0; --i) b2.push_back(s.ratfun(1));
    const HolCorr k1 = from_branches(b1);
    const HolCorr k2 = from_branches(b2);
    try {
      const HolCorr k = compose(k2, k1);
      EXPECT_LE(k.degree(), k1.degree() * k2.degree());
      // Every chain z -> b1(z) -> b2(b1(z)) lands in the composed fiber.
      const Gaussian z0 = G("2/7");
      for (const RatFun& r1 : b1) {
        const auto w = r1.eval(z0);
        if (!w) continue;
        for (const RatFun& r2 : b2) {
          const auto u = r2.eval(*w);
          const auto v = u ? value_at(k, z0, *u) : std::nullopt;
          if (v) EXPECT_TRUE(v->is_zero()) << "trial " << trial;
        }
      }
    } catch (const DomainError&) {
      // Constant branches can make the elimination degenerate; that is reported, not hidden.
    }
  }
}

TEST(Compose, SquarefreeCollapsesRepeatedBranches) {
  // z -> {z, -z} -> z^2 gives the branch z^2 twice.
  const HolCorr k1 = from_branches({R("z"), R("-z")});
  const HolCorr k = compose(graph(R("z^2")), k1);
  EXPECT_EQ(k.degree(), 2);
  EXPECT_EQ(k, from_branches({R("z^2"), R("z^2")}));
  const HolCorr sf = compose(graph(R("z^2")), k1, true);
  EXPECT_EQ(sf.degree(), 1);
  EXPECT_TRUE(sf.squarefree());
  EXPECT_EQ(sf.poly(), graph(R("z^2")).poly());
}

TEST(Compose, DistinctBranchesSurviveSquarefree) {
  const HolCorr k = from_branches({R("z"), R("z+1"), R("z^2")});
  const HolCorr id = graph(RatFun::variable());
  EXPECT_EQ(compose(id, k, true).degree(), 3);
}

TEST(Inverse, SquareRootOfTheSquareMap) {
  const auto inv = inverse(graph(R("z^2")));
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(inv->poly(), W({R("-z"), R("0"), R("1")}));
}

TEST(Inverse, MobiusGraphGoesToTheInverseMap) {
  // f = (2z+1)/(z+3) has inverse (3w-1)/(2-w) = (-3z+1)/(z-2).
  const auto inv = inverse(graph(R("2z+1", "z+3")));
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv, graph(R("-3z+1", "z-2")));
}

TEST(Inverse, ConstantGraphHasNoInverse) {
  EXPECT_FALSE(inverse(graph(R("5"))).has_value());
  EXPECT_FALSE(inverse(graph(R("0"))).has_value());
}

TEST(Inverse, IsAnInvolution) {
  Sampler s(rittforge::testing::seed() + 3);
  std::vector<HolCorr> samples{graph(R("z^3-z")), HolCorr(W({R("-z"), R("0"), R("1")})),
                               from_branches({R("z+1"), R("1", "z")})};
  for (int trial = 0; trial < 8; ++trial) {
    const RatFun f = s.ratfun(2);
    if (!f.is_constant()) samples.push_back(graph(f));
  }
  for (const HolCorr& k : samples) {
    const auto once = inverse(k);
    ASSERT_TRUE(once.has_value());
    const auto twice = inverse(*once);
    ASSERT_TRUE(twice.has_value());
    EXPECT_EQ(*twice, k);
  }
}

TEST(Fiber, Examples) {
  const auto a = fiber(graph(R("z^2")), 2.0);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_NEAR(std::abs(a[0] - cd(4.0)), 0.0, 1e-9);

  const auto b = fiber(HolCorr(W({R("-z"), R("0"), R("1")})), 4.0);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_NEAR(std::abs(b[0] - cd(-2.0)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(b[1] - cd(2.0)), 0.0, 1e-9);

  const auto c = fiber(from_branches({R("z"), R("-z")}), 3.0);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(std::abs(c[0] - cd(-3.0)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(c[1] - cd(3.0)), 0.0, 1e-9);
}

TEST(Fiber, PoleIsRejected) {
  EXPECT_THROW(fiber(graph(R("1", "z-1")), 1.0), DomainError);
}

TEST(Fiber, OrderingIsLexicographic) {
  const auto roots = fiber(from_branches({R("3"), R("-1"), R("z"), R("-z")}), cd(0.0, 2.0));
  ASSERT_EQ(roots.size(), 4u);
  for (std::size_t k = 1; k < roots.size(); ++k) {
    EXPECT_TRUE(roots[k - 1].real() < roots[k].real() ||
                (roots[k - 1].real() == roots[k].real() && roots[k - 1].imag() <= roots[k].imag()));
  }
}

TEST(Fiber, RebuildsTheSpecializedPolynomial) {
  Sampler s(rittforge::testing::seed() + 4);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RatFun> b;
    for (int i = s.uniform(1, 4); i > 0; --i) b.push_back(s.ratfun(2));
    const HolCorr k = from_branches(b);
    const cd z0(coord(s.rng), coord(s.rng));
    const auto roots = fiber(k, z0);
    const auto rebuilt = from_roots(roots);
    ASSERT_EQ(rebuilt.size(), static_cast<std::size_t>(k.degree()) + 1);
    double scale = 1.0;
    std::vector<cd> direct;
    for (const RatFun& c : k.poly().coeffs()) {
      direct.push_back(c.eval_complex(z0));
      scale = std::max(scale, std::abs(direct.back()));
    }
    for (std::size_t i = 0; i < direct.size(); ++i) {
      EXPECT_LE(std::abs(rebuilt[i] - direct[i]) / scale, 1e-8) << "trial " << trial;
    }
    // The branch values themselves are the fiber.
    for (const RatFun& r : b) EXPECT_TRUE(contains_near(roots, r.eval_complex(z0), 1e-6 * scale));
  }
}
