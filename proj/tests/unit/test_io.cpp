#include <gtest/gtest.h>

#include "rittforge/errors.hpp"
#include "rittforge/io.hpp"
#include "support.hpp"

using namespace rittforge;
using rittforge::testing::G;
using rittforge::testing::P;
using io::json;

namespace {

// Serialize, print, parse and read back.
template <class T, class Reader>
T through_text(const T& value, Reader read) {
  return read(io::parse(io::to_json(value).dump()));
}

}  // namespace

TEST(Json, GaussianLiterals) {
  EXPECT_EQ(io::to_json(G("1/2")), json("1/2"));
  EXPECT_EQ(io::gaussian_from_json(json("3")), G("3"));
  EXPECT_EQ(io::gaussian_from_json(json("-1/2+3/4 i")), G("-1/2+3/4i"));
  EXPECT_EQ(io::gaussian_from_json(json("0.25")), G("1/4"));
  EXPECT_THROW(io::gaussian_from_json(json(1.5)), ParseError);
}

TEST(Json, PolyRoundTrip) {
  Sampler s(rittforge::testing::seed());
  for (int trial = 0; trial < 50; ++trial) {
    const Poly p = s.poly(s.uniform(0, 6), 5, 4, 0.7);
    EXPECT_EQ(through_text(p, io::poly_from_json), p);
  }
  // Coefficients are always written as p/q.
  EXPECT_EQ(io::to_json(P("z^2-1")), json::parse(R"({"coeffs": ["-1/1", "0/1", "1/1"]})"));
  EXPECT_EQ(io::poly_from_json(json::parse(R"({"coeffs": ["-1", "0", 1]})")), P("z^2-1"));
  EXPECT_EQ(io::poly_from_json(json::parse(R"({"expr": "z^3+z"})")), P("z^3+z"));
}

TEST(Json, RatFunRoundTrip) {
  Sampler s(rittforge::testing::seed() + 1);
  for (int trial = 0; trial < 30; ++trial) {
    const RatFun r = s.ratfun(3);
    EXPECT_EQ(through_text(r, io::ratfun_from_json), r);
  }
  EXPECT_EQ(io::ratfun_from_json(io::to_json(P("z^2"))), RatFun(P("z^2")));
  EXPECT_THROW(io::ratfun_from_json(json::parse(R"({"num": {"coeffs": ["1"]}, "den": {"coeffs": []}})")),
               ParseError);
}

TEST(Json, AffineAndWitness) {
  const AffineMap f(G("2+i"), G("-1/3"));
  EXPECT_EQ(through_text(f, io::affine_from_json), f);
  const BiEquivWitness w{f, AffineMap(G("1/2"), G("i"))};
  EXPECT_EQ(through_text(w, io::witness_from_json), w);
  EXPECT_THROW(io::affine_from_json(json::parse(R"({"a": "0", "b": "1"})")), ParseError);
}

TEST(Json, DecompositionRoundTrip) {
  const Decomposition d = complete_decomposition(P("z^6+2z^3+5"));
  const json j = io::to_json(d);
  EXPECT_EQ(j["invariants"]["length"], 2);
  EXPECT_EQ(j["invariants"]["degrees"], json::parse("[2, 3]"));
  EXPECT_EQ(through_text(d, io::decomposition_from_json), d);
  // Factors are validated on input.
  EXPECT_THROW(io::decomposition_from_json(json::parse(R"({"factors": [{"expr": "z^4"}]})")), DomainError);
}

TEST(Json, MovesRoundTrip) {
  const std::vector<RittMove> moves{AffineShuffle{2, AffineMap(G("3"), G("1"))}, ChebyshevSwap{1},
                                    MonomialSwap{3, 2, 1}};
  for (const RittMove& m : moves) EXPECT_EQ(through_text(m, io::move_from_json), m);
  EXPECT_THROW(io::move_from_json(json::parse(R"({"type": "swap", "position": 1})")), ParseError);
  EXPECT_THROW(io::move_from_json(json::parse(R"({"type": "chebyshev_swap"})")), ParseError);
}

TEST(Json, CharValues) {
  const std::vector<CharValue> values{CharValue::zero(), CharValue::exact(G("9/4")),
                                      CharValue::power(std::string("e"), 3), CharValue::exact(G("1+i"))};
  for (const CharValue& v : values) EXPECT_EQ(through_text(v, io::charvalue_from_json), v);
  EXPECT_EQ(io::to_json(CharValue::zero()), json("0"));
  EXPECT_EQ(io::to_json(CharValue::power(std::string("a"), 2)), json::parse(R"({"base": "a", "exp": 2})"));
}

TEST(Json, HolCorrKeepsTheLeadingOne) {
  const HolCorr k = from_branches({RatFun(P("z+1")), RatFun(P("1"), P("z"))});
  const json j = io::to_json(k);
  ASSERT_EQ(j["coeffs_in_W"].size(), 3u);
  EXPECT_EQ(io::ratfun_from_json(j["coeffs_in_W"][2]), RatFun(1));
  EXPECT_EQ(through_text(k, io::hcorr_from_json), k);
  const HolCorr sf(k.poly(), true);
  EXPECT_TRUE(through_text(sf, io::hcorr_from_json).squarefree());
  EXPECT_THROW(io::hcorr_from_json(json::parse(R"({"coeffs_in_W": [{"coeffs": ["1"]}]})")), ParseError);
}

TEST(Json, FiniteCorrMatrices) {
  const FiniteCorr k(3, {0b011, 0b100, 0b001});
  const json j = io::to_json(k);
  EXPECT_EQ(j, json::parse("[[1, 1, 0], [0, 0, 1], [1, 0, 0]]"));
  EXPECT_EQ(through_text(k, io::finitecorr_from_json), k);
  EXPECT_THROW(io::finitecorr_from_json(json::parse("[[1, 0], [0]]")), ParseError);
  EXPECT_THROW(io::finitecorr_from_json(json::parse("[[2]]")), ParseError);
  EXPECT_THROW(io::finitecorr_from_json(json::parse("[]")), ParseError);
  // An empty row leaves a point outside the domain.
  EXPECT_THROW(io::finitecorr_from_json(json::parse("[[1, 0], [0, 0]]")), DomainError);
}

TEST(Json, SyntaxErrorsAreParseErrors) {
  EXPECT_THROW(io::parse("{\"coeffs\": [1,"), ParseError);
  EXPECT_THROW(io::poly_from_json(json::parse("{}")), ParseError);
  EXPECT_THROW(io::poly_from_json(json::parse(R"({"coeffs": "1"})")), ParseError);
}
