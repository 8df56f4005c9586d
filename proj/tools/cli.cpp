#include "cli.hpp"

#include <CLI11.hpp>

#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "rittforge/characters.hpp"
#include "rittforge/corr_finite.hpp"
#include "rittforge/decompose.hpp"
#include "rittforge/equivalence.hpp"
#include "rittforge/errors.hpp"
#include "rittforge/hcorr.hpp"
#include "rittforge/io.hpp"
#include "rittforge/julia.hpp"
#include "rittforge/random.hpp"
#include "rittforge/suite.hpp"

namespace rittforge::cli {

namespace {

using io::json;

/// Bad invocation rather than bad mathematics: exit code 2.
class ArgumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DecomposeCmd {
  Poly p;
};
struct RittApplyCmd {
  Decomposition d;
  RittMove move;
};
struct CharEvalCmd {
  Character chi;
  Poly p;
};
struct EquivBiorbitCmd {
  Poly p, q;
};
struct EquivConjCmd {
  Poly p, q;
};
struct SandwichComposeCmd {
  Poly g, f, h;
};
struct CorrVerifyCmd {
  VerifySuite suite;
  int n;
  Ambient ambient;
};
struct HcorrComposeCmd {
  HolCorr k1, k2;
  bool squarefree;
};
struct HcorrFiberCmd {
  HolCorr k;
  std::complex<double> at;
};
struct JuliaRenderCmd {
  std::string map_text;
  RatFun map;
  Region region;
  RenderOptions options;
  std::string out_path;
  std::string csv_path;
  bool ascii;
};
struct SuiteAllCmd {
  std::vector<int> ids;
  std::uint64_t seed;
};

using Command = std::variant<DecomposeCmd, RittApplyCmd, CharEvalCmd, EquivBiorbitCmd, EquivConjCmd,
                             SandwichComposeCmd, CorrVerifyCmd, HcorrComposeCmd, HcorrFiberCmd, JuliaRenderCmd,
                             SuiteAllCmd>;

bool looks_inline(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  return first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

/// Inline JSON, "-" for standard input, or a file path.
json load_json(const std::string& arg) {
  if (looks_inline(arg)) return io::parse(arg);
  if (arg == "-") return io::parse(read_all(std::cin));
  std::ifstream file(arg);
  if (!file) throw ArgumentError("cannot read " + arg);
  return io::parse(read_all(file));
}

/// Like load_json, but anything that is neither JSON nor an existing file is
/// read as an expression such as "z^3+z".
Poly load_poly(const std::string& arg) {
  if (looks_inline(arg) || arg == "-" || std::filesystem::exists(arg)) return io::poly_from_json(load_json(arg));
  return parse_poly_expression(arg);
}

HolCorr load_hcorr(const std::string& arg) { return io::hcorr_from_json(load_json(arg)); }

/// "x,y" with exact rational or decimal parts.
Gaussian parse_point(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ArgumentError(flag + " expects \"x,y\", got \"" + text + "\"");
  try {
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
  } catch (const ParseError& e) {
    throw ArgumentError(flag + ": " + e.what());
  }
}

Rational parse_positive(const std::string& text, const std::string& flag) {
  Rational r;
  try {
    r = Rational::parse(text);
  } catch (const ParseError& e) {
    throw ArgumentError(flag + ": " + e.what());
  }
  if (r.sign() <= 0) throw ArgumentError(flag + " must be positive");
  return r;
}

CharBase parse_base(const std::string& text) {
  try {
    return Gaussian::parse(text);
  } catch (const ParseError&) {
    return text;  // symbolic base such as "e" or "a"
  }
}

json report_json(const VerifyReport& r) {
  json j{{"suite", suite_name(r.suite)},
         {"n", r.n},
         {"ambient", r.ambient == Ambient::MapX ? "map" : "corr"},
         {"checked", r.checked},
         {"pass", r.pass}};
  if (r.suite == VerifySuite::Aut) {
    j["automorphisms"] = r.automorphisms;
    j["expected"] = r.expected;
  }
  json dumps = json::array();
  for (const auto& witness : r.counterexamples) {
    json w = json::array();
    for (const FiniteCorr& k : witness) w.push_back(io::to_json(k));
    dumps.push_back(w);
  }
  j["counterexamples"] = dumps;
  return j;
}

json witness_or_none(const std::optional<BiEquivWitness>& w) {
  return w ? io::to_json(*w) : json{{"result", "none"}};
}

class Runner {
 public:
  Runner(std::ostream& out, bool json_mode) : out_(out), json_mode_(json_mode) {}

  int operator()(const DecomposeCmd& c) { return emit(io::to_json(complete_decomposition(c.p))); }

  int operator()(const RittApplyCmd& c) { return emit(io::to_json(apply_move(c.d, c.move))); }

  int operator()(const CharEvalCmd& c) { return emit(json{{"value", io::to_json(evaluate(c.chi, c.p).canonical())}}); }

  int operator()(const EquivBiorbitCmd& c) { return emit(witness_or_none(affine_biequiv(c.p, c.q))); }

  int operator()(const EquivConjCmd& c) {
    const auto f = affine_conjugate(c.p, c.q);
    // q = f∘p∘f⁻¹, reported in the witness shape q = A∘p∘B.
    return emit(witness_or_none(f ? std::optional<BiEquivWitness>(BiEquivWitness{*f, f->inverse()}) : std::nullopt));
  }

  int operator()(const SandwichComposeCmd& c) {
    return emit(io::to_json(sandwich_compose(SandwichSemigroup<Poly>{c.g}, c.f, c.h)));
  }

  int operator()(const CorrVerifyCmd& c) {
    const VerifyReport r = verify_suite(c.suite, c.n, c.ambient);
    emit(report_json(r));
    return r.pass ? 0 : 1;
  }

  int operator()(const HcorrComposeCmd& c) { return emit(io::to_json(compose(c.k2, c.k1, c.squarefree))); }

  int operator()(const HcorrFiberCmd& c) {
    json roots = json::array();
    for (const auto& w : fiber(c.k, c.at)) roots.push_back({w.real() + 0.0, w.imag() + 0.0});  // no negative zeros
    return emit(json{{"at", {c.at.real(), c.at.imag()}}, {"roots", roots}});
  }

  int operator()(const JuliaRenderCmd& c) {
    const GridClassification g = render(c.map, c.region, c.options);
    if (!c.out_path.empty()) {
      std::ofstream file(c.out_path, std::ios::binary);
      if (!file) throw ArgumentError("cannot write " + c.out_path);
      write_pgm(file, g, !c.ascii);
    } else if (!json_mode_) {
      write_pgm(out_, g, !c.ascii);
    }
    if (!c.csv_path.empty()) {
      std::ofstream file(c.csv_path);
      if (!file) throw ArgumentError("cannot write " + c.csv_path);
      write_csv(file, g);
    }
    if (!c.out_path.empty() || json_mode_) {
      std::map<std::string, std::size_t> counts;
      for (CellClass cls : {CellClass::Finite, CellClass::Undecided, CellClass::Attracted, CellClass::Escape}) {
        counts[class_name(cls)] = 0;
      }
      for (CellClass cls : g.cells) ++counts[class_name(cls)];
      json summary{{"map", c.map_text}, {"nx", g.nx}, {"ny", g.ny}, {"counts", counts}};
      if (!c.out_path.empty()) summary["out"] = c.out_path;
      if (!c.csv_path.empty()) summary["csv"] = c.csv_path;
      emit(summary);
    }
    return 0;
  }

  int operator()(const SuiteAllCmd& c) {
    const std::vector<CriterionResult> results = run_suite(c.ids, c.seed);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    if (json_mode_) {
      json rows = json::array();
      for (const auto& r : results) {
        rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      }
      emit(json{{"seed", c.seed}, {"results", rows}, {"pass", all}});
    } else {
      for (const auto& r : results) {
        out_ << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << ": " << r.detail << "\n";
      }
      out_ << (all ? "all checks passed" : "some checks failed") << "\n";
    }
    return all ? 0 : 1;
  }

 private:
  int emit(const json& j) {
    out_ << j.dump(2) << "\n";
    return 0;
  }

  std::ostream& out_;
  bool json_mode_;
};

/// Raw option values; turned into a Command once CLI11 has validated the shape.
struct RawArgs {
  bool json_mode = false;
  std::string a, b, c;
  std::string move;
  std::string kind = "degree";
  std::string base;
  std::string prime;
  int exponent = 1;
  int n = 3;
  std::string suite;
  std::string ambient = "map";
  bool squarefree = false;
  std::string at;
  std::string map = "z^2";
  std::string center = "0,0";
  std::string width = "4";
  std::string height;
  int res = 512;
  int res_y = 0;
  std::string out_path;
  std::string csv_path;
  bool exact = false;
  bool ascii = false;
  bool no_refine = false;
  int max_iter = 1000;
  unsigned threads = 0;
  std::vector<int> ids;
  std::optional<std::uint64_t> seed;
};

struct Subcommands {
  CLI::App* decompose;
  CLI::App* ritt_apply;
  CLI::App* char_eval;
  CLI::App* equiv_biorbit;
  CLI::App* equiv_conj;
  CLI::App* sandwich_compose;
  CLI::App* corr_verify;
  CLI::App* hcorr_compose;
  CLI::App* hcorr_fiber;
  CLI::App* julia_render;
  CLI::App* suite;
};

Subcommands build_app(CLI::App& app, RawArgs& raw) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", raw.json_mode, "Emit JSON on every subcommand");

  Subcommands s{};
  s.decompose = app.add_subcommand("decompose", "Complete decomposition into prime factors");
  s.decompose->add_option("poly", raw.a, "Polynomial: JSON, file, '-' or expression")->required();

  auto* ritt = app.add_subcommand("ritt", "Ritt moves on decompositions");
  ritt->require_subcommand(1);
  s.ritt_apply = ritt->add_subcommand("apply", "Apply one move to a decomposition");
  s.ritt_apply->add_option("decomposition", raw.a, "Decomposition JSON")->required();
  s.ritt_apply->add_option("move", raw.move, "Move JSON")->required();

  auto* chr = app.add_subcommand("char", "Multiplicative characters");
  chr->require_subcommand(1);
  s.char_eval = chr->add_subcommand("eval", "Evaluate a character");
  s.char_eval->add_option("--kind", raw.kind, "degree, length or orbit")
      ->check(CLI::IsMember({"degree", "length", "orbit"}));
  s.char_eval->add_option("--base", raw.base, "Base of the value: a symbol or an exact number");
  s.char_eval->add_option("--prime", raw.prime, "Prime P of the orbit character");
  s.char_eval->add_option("--exponent", raw.exponent, "Exponent s of the degree character");
  s.char_eval->add_option("poly", raw.a, "Polynomial")->required();

  auto* equiv = app.add_subcommand("equiv", "Affine equivalence");
  equiv->require_subcommand(1);
  s.equiv_biorbit = equiv->add_subcommand("biorbit", "Find A, B with q = A∘p∘B");
  s.equiv_conj = equiv->add_subcommand("conj", "Find f with q = f∘p∘f⁻¹");
  for (CLI::App* sub : {s.equiv_biorbit, s.equiv_conj}) {
    sub->add_option("p", raw.a, "Polynomial p")->required();
    sub->add_option("q", raw.b, "Polynomial q")->required();
  }

  auto* sandwich = app.add_subcommand("sandwich", "Sandwich semigroups");
  sandwich->require_subcommand(1);
  s.sandwich_compose = sandwich->add_subcommand("compose", "f ∗_g h = f∘g∘h");
  s.sandwich_compose->add_option("kernel", raw.a, "Kernel g")->required();
  s.sandwich_compose->add_option("left", raw.b, "Left factor f")->required();
  s.sandwich_compose->add_option("right", raw.c, "Right factor h")->required();

  auto* corr = app.add_subcommand("corr", "Correspondences on finite sets");
  corr->require_subcommand(1);
  s.corr_verify = corr->add_subcommand("verify", "Exhaustive structure checks");
  s.corr_verify->add_option("--n", raw.n, "Size of the ground set")->check(CLI::Range(1, 8));
  s.corr_verify->add_option("--suite", raw.suite, "schreier, alpha, blocks, ideal or aut")
      ->required()
      ->check(CLI::IsMember({"schreier", "alpha", "blocks", "ideal", "aut"}));
  s.corr_verify->add_option("--ambient", raw.ambient, "map or corr (schreier and aut)")
      ->check(CLI::IsMember({"map", "corr"}));

  auto* hcorr = app.add_subcommand("hcorr", "Holomorphic correspondences");
  hcorr->require_subcommand(1);
  s.hcorr_compose = hcorr->add_subcommand("compose", "k2∘k1 with k1 applied first");
  s.hcorr_compose->add_option("k1", raw.a, "First correspondence")->required();
  s.hcorr_compose->add_option("k2", raw.b, "Second correspondence")->required();
  s.hcorr_compose->add_flag("--squarefree", raw.squarefree, "Drop repeated branches");
  s.hcorr_fiber = hcorr->add_subcommand("fiber", "Branch values over a point");
  s.hcorr_fiber->add_option("k", raw.a, "Correspondence")->required();
  s.hcorr_fiber->add_option("--at", raw.at, "Point \"x,y\"")->required();

  auto* julia = app.add_subcommand("julia", "Orbit classification on a grid");
  julia->require_subcommand(1);
  s.julia_render = julia->add_subcommand("render", "Classify a grid of starting points");
  s.julia_render->add_option("--map", raw.map, "Polynomial expression in z, or RatFun JSON");
  s.julia_render->add_option("--center", raw.center, "Center \"x,y\"");
  s.julia_render->add_option("--width", raw.width, "Region width");
  s.julia_render->add_option("--height", raw.height, "Region height (defaults to the width)");
  s.julia_render->add_option("--res", raw.res, "Cells per row")->check(CLI::PositiveNumber);
  s.julia_render->add_option("--res-y", raw.res_y, "Rows (defaults to --res)")->check(CLI::PositiveNumber);
  s.julia_render->add_option("--out", raw.out_path, "PGM output file (standard output when absent)");
  s.julia_render->add_option("--csv", raw.csv_path, "CSV output file");
  s.julia_render->add_flag("--exact", raw.exact, "Try exact orbits at cell centers first");
  s.julia_render->add_flag("--ascii", raw.ascii, "Plain P2 instead of binary P5");
  s.julia_render->add_flag("--no-refine", raw.no_refine, "Skip the boundary refinement");
  s.julia_render->add_option("--max-iter", raw.max_iter, "Iteration budget")->check(CLI::PositiveNumber);
  s.julia_render->add_option("--threads", raw.threads, "Worker threads (0 = all cores)");

  s.suite = app.add_subcommand("suite", "Run the acceptance checks");
  s.suite->add_option("ids", raw.ids, "Check numbers (all when omitted)")->check(CLI::Range(1, kCriterionCount));
  s.suite->add_option("--seed", raw.seed, "Seed (default: RITTFORGE_SEED or the built-in seed)");
  return s;
}

Command to_command(const Subcommands& s, const RawArgs& raw) {
  if (s.decompose->parsed()) return DecomposeCmd{load_poly(raw.a)};
  if (s.ritt_apply->parsed()) {
    return RittApplyCmd{io::decomposition_from_json(load_json(raw.a)), io::move_from_json(load_json(raw.move))};
  }
  if (s.char_eval->parsed()) {
    const CharBase base = raw.base.empty() ? CharBase(std::string(raw.kind == "orbit" ? "a" : "e")) : parse_base(raw.base);
    Character chi = DegreeChar{raw.exponent};
    if (raw.kind == "length") chi = LengthChar{base};
    if (raw.kind == "orbit") {
      if (raw.prime.empty()) throw ArgumentError("--kind orbit requires --prime");
      chi = AffineOrbitChar{load_poly(raw.prime), base};
    }
    return CharEvalCmd{chi, load_poly(raw.a)};
  }
  if (s.equiv_biorbit->parsed()) return EquivBiorbitCmd{load_poly(raw.a), load_poly(raw.b)};
  if (s.equiv_conj->parsed()) return EquivConjCmd{load_poly(raw.a), load_poly(raw.b)};
  if (s.sandwich_compose->parsed()) return SandwichComposeCmd{load_poly(raw.a), load_poly(raw.b), load_poly(raw.c)};
  if (s.corr_verify->parsed()) {
    return CorrVerifyCmd{*suite_from_name(raw.suite), raw.n, raw.ambient == "corr" ? Ambient::CorrX : Ambient::MapX};
  }
  if (s.hcorr_compose->parsed()) return HcorrComposeCmd{load_hcorr(raw.a), load_hcorr(raw.b), raw.squarefree};
  if (s.hcorr_fiber->parsed()) return HcorrFiberCmd{load_hcorr(raw.a), parse_point(raw.at, "--at").to_complex()};
  if (s.julia_render->parsed()) {
    JuliaRenderCmd c;
    c.map_text = raw.map;
    c.map = looks_inline(raw.map) ? io::ratfun_from_json(load_json(raw.map)) : RatFun(parse_poly_expression(raw.map));
    c.region.center = parse_point(raw.center, "--center");
    c.region.width = parse_positive(raw.width, "--width");
    c.region.height = raw.height.empty() ? c.region.width : parse_positive(raw.height, "--height");
    c.options.nx = raw.res;
    c.options.ny = raw.res_y > 0 ? raw.res_y : raw.res;
    c.options.max_iter = raw.max_iter;
    c.options.exact = raw.exact;
    c.options.boundary_refinement = !raw.no_refine;
    c.options.threads = raw.threads;
    c.out_path = raw.out_path;
    c.csv_path = raw.csv_path;
    c.ascii = raw.ascii;
    return c;
  }
  return SuiteAllCmd{raw.ids, raw.seed.value_or(default_seed())};
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Composition semigroups of polynomial and rational maps", "rittforge"};
  RawArgs raw;
  const Subcommands subcommands = build_app(app, raw);

  std::vector<const char*> argv{"rittforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const Command command = to_command(subcommands, raw);
    Runner runner(out, raw.json_mode);
    return std::visit(runner, command);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // Domain errors, including malformed documents, are reported as data.
    out << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace rittforge::cli
