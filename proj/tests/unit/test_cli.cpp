#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "rittforge/io.hpp"
#include "support.hpp"

using namespace rittforge;
using rittforge::testing::P;
using io::json;

namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Invocation r;
  r.code = cli::parse_and_dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string inline_json(const json& j) { return j.dump(); }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "rittforge_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, DecomposeExample) {
  const Invocation r = run({"decompose", R"({"coeffs":["1/1","0/1","0/1","0/1","0/1","0/1","1/1"]})"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const json j = r.doc();
  EXPECT_EQ(j["invariants"]["degrees"], json::parse("[2, 3]"));
  // The emitted document reads back to the same decomposition.
  EXPECT_EQ(io::decomposition_from_json(j), complete_decomposition(P("z^6+1")));
}

TEST(Cli, DecomposeAcceptsExpressionsAndFiles) {
  EXPECT_EQ(run({"decompose", "z^4+2z^2"}).doc()["invariants"]["length"], 2);
  const auto path = scratch("poly.json");
  std::ofstream(path) << io::to_json(P("z^6+1")).dump();
  EXPECT_EQ(run({"decompose", path.string()}).doc()["invariants"]["degrees"], json::parse("[2, 3]"));
}

TEST(Cli, RittApplyMonomialSwap) {
  const std::string d = R"({"factors": [{"expr": "z^2"}, {"expr": "z^3+z"}]})";
  const std::string m = R"({"type": "monomial_swap", "position": 1, "k": 2, "r": 1})";
  const Invocation r = run({"ritt", "apply", d, m});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const Decomposition out = io::decomposition_from_json(r.doc());
  EXPECT_EQ(out.factors(), (std::vector<Poly>{P("z^3+2z^2+z"), P("z^2")}));
  EXPECT_EQ(out.compose(), P("z^6+2z^4+z^2"));
}

TEST(Cli, CharEvalKinds) {
  EXPECT_EQ(io::charvalue_from_json(run({"char", "eval", "z^6+1"}).doc()["value"]), CharValue::exact(Gaussian(6)));
  EXPECT_EQ(io::charvalue_from_json(run({"char", "eval", "--exponent", "2", "z^3"}).doc()["value"]),
            CharValue::exact(Gaussian(9)));
  EXPECT_EQ(run({"char", "eval", "--kind", "length", "z^6+1"}).doc()["value"], json::parse(R"({"base": "e", "exp": 2})"));
  EXPECT_EQ(run({"char", "eval", "--kind", "length", "--base", "2", "z^6+1"}).doc()["value"], json("4/1"));
  EXPECT_EQ(run({"char", "eval", "--kind", "orbit", "--prime", "z^2+1", "z^4+2z^2+2"}).doc()["value"],
            json::parse(R"({"base": "a", "exp": 2})"));
  EXPECT_EQ(run({"char", "eval", "--kind", "length", "7"}).doc()["value"], json("0"));
}

TEST(Cli, CharEvalOrbitNeedsAPrime) {
  const Invocation r = run({"char", "eval", "--kind", "orbit", "z^2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--prime"), std::string::npos);
  EXPECT_EQ(run({"char", "eval", "--kind", "weight", "z^2"}).code, 2);
}

TEST(Cli, EquivBiorbitFindsAVerifyingWitness) {
  const Poly p = P("z^3+z");
  const Poly q = P("2(3z-1)^3+2(3z-1)+5");
  const Invocation r = run({"equiv", "biorbit", "z^3+z", inline_json(io::to_json(q))});
  ASSERT_EQ(r.code, 0) << r.out;
  const BiEquivWitness w = io::witness_from_json(r.doc());
  EXPECT_EQ(poly_compose(w.A.as_poly(), poly_compose(p, w.B.as_poly())), q);
  EXPECT_EQ(run({"equiv", "biorbit", "z^2", "z^3"}).doc(), json::parse(R"({"result": "none"})"));
}

TEST(Cli, EquivConjReturnsAConjugacy) {
  const Poly p = P("z^2");
  const Poly q = P("z^2-2z+2");  // (z+1)∘z^2∘(z-1)
  const Invocation r = run({"equiv", "conj", "z^2", "z^2-2z+2"});
  ASSERT_EQ(r.code, 0) << r.out;
  const BiEquivWitness w = io::witness_from_json(r.doc());
  EXPECT_EQ(w.B, w.A.inverse());
  EXPECT_EQ(poly_compose(w.A.as_poly(), poly_compose(p, w.B.as_poly())), q);
  EXPECT_EQ(run({"equiv", "conj", "z^2", "2z^2"}).code, 0);
  EXPECT_EQ(run({"equiv", "conj", "z^2", "z^3"}).doc(), json::parse(R"({"result": "none"})"));
}

TEST(Cli, SandwichCompose) {
  const Invocation r = run({"sandwich", "compose", "z^2", "z+1", "2z"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::poly_from_json(r.doc()), P("4z^2+1"));
}

TEST(Cli, CorrVerifyAutExample) {
  const Invocation r = run({"corr", "verify", "--n", "2", "--suite", "aut"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json j = r.doc();
  EXPECT_EQ(j["automorphisms"], 2);
  EXPECT_EQ(j["expected"], 2);
  EXPECT_EQ(j["pass"], true);
}

TEST(Cli, CorrVerifyEverySuite) {
  for (const char* suite : {"schreier", "alpha", "blocks", "ideal", "aut"}) {
    const Invocation r = run({"corr", "verify", "--n", "3", "--suite", suite});
    EXPECT_EQ(r.code, 0) << suite << ": " << r.out;
    EXPECT_EQ(r.doc()["pass"], true) << suite;
    EXPECT_GT(r.doc()["checked"].get<long>(), 0) << suite;
  }
  EXPECT_EQ(run({"corr", "verify", "--n", "3", "--suite", "aut", "--ambient", "corr"}).doc()["automorphisms"], 6);
}

TEST(Cli, CorrVerifyBudgetAndArguments) {
  const Invocation big = run({"corr", "verify", "--n", "6", "--suite", "schreier"});
  EXPECT_EQ(big.code, 1);
  EXPECT_TRUE(big.doc().contains("error"));
  EXPECT_EQ(run({"corr", "verify", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"corr", "verify", "--n", "2", "--suite", "everything"}).code, 2);
  EXPECT_EQ(run({"corr", "verify", "--n", "0", "--suite", "aut"}).code, 2);
}

TEST(Cli, HcorrCompose) {
  const std::string k1 = inline_json(io::to_json(graph(RatFun(P("z^2")))));
  const std::string k2 = inline_json(io::to_json(graph(RatFun(P("z+1")))));
  const Invocation r = run({"hcorr", "compose", k1, k2});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(io::hcorr_from_json(r.doc()), graph(RatFun(P("z^2+1"))));

  const std::string pm = inline_json(io::to_json(from_branches({RatFun(P("z")), RatFun(P("-z"))})));
  const std::string sq = inline_json(io::to_json(graph(RatFun(P("z^2")))));
  EXPECT_EQ(io::hcorr_from_json(run({"hcorr", "compose", pm, sq}).doc()).degree(), 2);
  const HolCorr collapsed = io::hcorr_from_json(run({"hcorr", "compose", pm, sq, "--squarefree"}).doc());
  EXPECT_EQ(collapsed.degree(), 1);
  EXPECT_TRUE(collapsed.squarefree());
}

TEST(Cli, HcorrFiber) {
  const HolCorr k(BiPoly(std::vector<RatFun>{RatFun(P("-z")), RatFun(0), RatFun(1)}));
  const Invocation r = run({"hcorr", "fiber", inline_json(io::to_json(k)), "--at", "4,0"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json roots = r.doc()["roots"];
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0][0].get<double>(), -2.0, 1e-9);
  EXPECT_NEAR(roots[1][0].get<double>(), 2.0, 1e-9);
  EXPECT_NEAR(roots[0][1].get<double>(), 0.0, 1e-9);
  EXPECT_EQ(run({"hcorr", "fiber", inline_json(io::to_json(k)), "--at", "4"}).code, 2);
  const std::string pole = inline_json(io::to_json(graph(RatFun(P("1"), P("z")))));
  EXPECT_EQ(run({"hcorr", "fiber", pole, "--at", "0,0"}).code, 1);
}

TEST(Cli, JuliaRenderToStandardOutput) {
  const Invocation r = run({"julia", "render", "--map", "z^2-1", "--res", "8", "--max-iter", "50"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string header = "P5\n8 8\n255\n";
  EXPECT_EQ(r.out.substr(0, header.size()), header);
  EXPECT_EQ(r.out.size(), header.size() + 64);
  const Invocation ascii = run({"julia", "render", "--res", "4", "--ascii", "--max-iter", "50"});
  EXPECT_EQ(ascii.out.substr(0, 3), "P2\n");
}

TEST(Cli, JuliaRenderFilesAndSummary) {
  const auto pgm = scratch("grid.pgm");
  const auto csv = scratch("grid.csv");
  const Invocation r = run({"julia", "render", "--map", "z^2", "--center", "0,0", "--width", "4", "--res", "16", "--res-y",
                     "8", "--out", pgm.string(), "--csv", csv.string(), "--max-iter", "100"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const json j = r.doc();
  EXPECT_EQ(j["nx"], 16);
  EXPECT_EQ(j["ny"], 8);
  long total = 0;
  for (const auto& [name, n] : j["counts"].items()) total += n.get<long>();
  EXPECT_EQ(total, 128);
  EXPECT_EQ(std::filesystem::file_size(pgm), std::string("P5\n16 8\n255\n").size() + 128);
  std::ifstream in(csv);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 129);

  const Invocation summary = run({"--json", "julia", "render", "--res", "4", "--max-iter", "50", "--exact"});
  EXPECT_EQ(summary.code, 0);
  EXPECT_TRUE(summary.doc().contains("counts"));
}

TEST(Cli, JuliaRenderArgumentErrors) {
  EXPECT_EQ(run({"julia", "render", "--center", "oops"}).code, 2);
  EXPECT_EQ(run({"julia", "render", "--width", "-1"}).code, 2);
  EXPECT_EQ(run({"julia", "render", "--res", "0"}).code, 2);
  const Invocation budget = run({"julia", "render", "--res", "9000", "--res-y", "1"});
  EXPECT_EQ(budget.code, 1);
  EXPECT_TRUE(budget.doc().contains("error"));
}

TEST(Cli, SuiteSelectedChecks) {
  const Invocation r = run({"--json", "suite", "2", "8", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json j = r.doc();
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["pass"], true);
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["id"], 2);
  const Invocation text = run({"suite", "4"});
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.out.substr(0, 4), "PASS");
  EXPECT_EQ(run({"suite", "11"}).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"decompose", "z^2", "--frobnicate"}).code, 2);
  EXPECT_EQ(run({"transmogrify"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"decompose", "--help"}).code, 0);
  EXPECT_EQ(run({"hcorr", "compose", "/nonexistent/k1.json", "/nonexistent/k2.json"}).code, 2);

  const Invocation constant = run({"decompose", "5"});
  EXPECT_EQ(constant.code, 1);
  EXPECT_TRUE(constant.doc().contains("error"));
  const Invocation garbage = run({"decompose", "z^^2"});
  EXPECT_EQ(garbage.code, 1);
  EXPECT_TRUE(garbage.doc().contains("error"));
  const Invocation malformed = run({"decompose", "{\"coeffs\": [1,"});
  EXPECT_EQ(malformed.code, 1);
}
