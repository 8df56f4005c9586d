#include "rittforge/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "rittforge/characters.hpp"
#include "rittforge/corr_finite.hpp"
#include "rittforge/decompose.hpp"
#include "rittforge/equivalence.hpp"
#include "rittforge/errors.hpp"
#include "rittforge/hcorr.hpp"
#include "rittforge/julia.hpp"
#include "rittforge/random.hpp"

namespace rittforge {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records the first failure only, to keep the report short.
  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail << what;
    }
  }
};

Poly z_pow(int k) { return Poly::monomial(Gaussian(1), k); }

Poly random_prime(Sampler& s, int degree) {
  // Prime degree makes every polynomial of that degree indecomposable.
  return s.poly(degree, 3, 2);
}

// Composition, length and degree multiset survive every available move.
void check_moves(Outcome& out, Sampler& s, const Decomposition& d, const Poly& p, int trial) {
  const RittInvariants inv = ritt_invariants(d);
  for (int j = 1; j < static_cast<int>(d.length()); ++j) {
    for (RittMove m : available_moves(d, j)) {
      if (auto* shuffle = std::get_if<AffineShuffle>(&m)) shuffle->A = s.affine();
      const Decomposition moved = apply_move(d, m);
      out.require(moved.compose() == p, "trial " + std::to_string(trial) + ": move changed the composition");
      out.require(ritt_invariants(moved) == inv, "trial " + std::to_string(trial) + ": move changed the invariants");
    }
  }
}

void ritt_invariance(Outcome& out, std::uint64_t seed) {
  Sampler s(seed);
  const int primes[] = {2, 3, 5};
  int moves_chebyshev = 0, moves_monomial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Poly> factors;
    switch (trial % 10) {
      case 0: {
        const int a = primes[s.uniform(0, 2)], b = primes[s.uniform(0, 2)];
        factors = {chebyshev(a), chebyshev(b)};
        ++moves_chebyshev;
        break;
      }
      case 1: {
        // z^2 ∘ z·P(z^2) with z·P(z^2) of degree 3 or 5.
        const int half = s.uniform(1, 2);
        std::vector<Gaussian> c(static_cast<std::size_t>(2 * half + 2));
        for (int e = 1; e <= 2 * half + 1; e += 2) c[static_cast<std::size_t>(e)] = s.gaussian();
        c.back() = s.nonzero_gaussian();
        factors = {z_pow(2), Poly(std::move(c))};
        ++moves_monomial;
        break;
      }
      default:
        factors = {random_prime(s, primes[s.uniform(0, 2)]), random_prime(s, primes[s.uniform(0, 2)])};
    }
    const Poly p = poly_compose(factors[0], factors[1]);
    std::vector<int> expected{factors[0].degree(), factors[1].degree()};
    std::sort(expected.begin(), expected.end());
    const Decomposition d = complete_decomposition(p);
    out.require(d.compose() == p, "trial " + std::to_string(trial) + ": decomposition does not recompose");
    out.require(ritt_invariants(d).degree_multiset == expected,
                "trial " + std::to_string(trial) + ": unexpected degree multiset");
    check_moves(out, s, d, p, trial);
    check_moves(out, s, Decomposition::trusted(factors), p, trial);
  }
  out.detail << (out.pass ? "100 products recomposed; moves preserved composition and invariants (" +
                                std::to_string(moves_chebyshev) + " Chebyshev, " + std::to_string(moves_monomial) +
                                " monomial pairs)"
                          : "");
}

void ritt_identities(Outcome& out, std::uint64_t) {
  const Poly t2 = chebyshev(2), t3 = chebyshev(3);
  const Poly expected_cheb = make_poly({-1, 0, 18, 0, -48, 0, 32});
  out.require(poly_compose(t2, t3) == expected_cheb, "T2∘T3 ≠ 32z^6-48z^4+18z^2-1");
  out.require(poly_compose(t3, t2) == expected_cheb, "T3∘T2 ≠ 32z^6-48z^4+18z^2-1");
  const Poly left = poly_compose(z_pow(2), make_poly({0, 1, 0, 1}));
  const Poly right = poly_compose(make_poly({0, 1, 2, 1}), z_pow(2));
  const Poly expected_mono = make_poly({0, 0, 1, 0, 2, 0, 1});
  out.require(left == expected_mono, "z^2∘(z^3+z) ≠ z^6+2z^4+z^2");
  out.require(right == expected_mono, "(z^3+2z^2+z)∘z^2 ≠ z^6+2z^4+z^2");
  // The swap engine produces the same identity.
  const Decomposition d = Decomposition::trusted({z_pow(2), make_poly({0, 1, 0, 1})});
  const Decomposition swapped = apply_move(d, MonomialSwap{1, 2, 1});
  out.require(swapped.factors()[0] == make_poly({0, 1, 2, 1}) && swapped.factors()[1] == z_pow(2),
              "monomial swap did not produce (z^3+2z^2+z, z^2)");
  if (out.pass) out.detail << "Chebyshev and monomial identities hold exactly";
}

void character_multiplicativity(Outcome& out, std::uint64_t seed) {
  Sampler s(seed);
  const Poly P = make_poly({0, 1, 0, 1});  // z^3 + z
  const std::vector<Character> chars{DegreeChar{1}, LengthChar{std::string("e")},
                                     AffineOrbitChar{P, std::string("a")}};
  auto sample = [&]() -> Poly {
    switch (s.uniform(0, 5)) {
      case 0:
        return Poly::constant(s.gaussian());
      case 1:
        return s.affine().as_poly();
      case 2:
        return s.poly(s.uniform(2, 3), 2, 2);
      case 3:
        return compose(s.affine(), compose(P, s.affine()));
      case 4: {
        const Poly inner = compose(s.affine(), compose(P, s.affine()));
        return compose(s.affine(), poly_compose(P, inner));
      }
      default:
        return poly_compose(s.poly(2, 2, 1), s.poly(2, 2, 1));
    }
  };
  int nonzero_orbit = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = sample(), q = sample();
    for (const Character& chi : chars) {
      for (const auto& v : verify_multiplicative(chi, {{p, q}})) {
        out.require(false, "trial " + std::to_string(trial) + ": χ(p∘q) = " + v.composed.to_string() +
                               " but χ(p)χ(q) = " + v.product.to_string());
      }
    }
    if (!evaluate(chars[2], poly_compose(p, q)).is_zero()) ++nonzero_orbit;
    const Poly c = Poly::constant(s.gaussian());
    for (const Character& chi : chars) out.require(evaluate(chi, c).is_zero(), "a constant has a nonzero value");
  }
  out.require(nonzero_orbit > 0, "the orbit character never left Zero");
  if (out.pass) {
    out.detail << "200 pairs × 3 characters multiplicative; constants map to 0; orbit character nonzero on "
               << nonzero_orbit << " products";
  }
}

void length_vs_degree(Outcome& out, std::uint64_t) {
  const Poly p = make_poly({0, 1, 0, 0, 1});  // z^4 + z
  const Poly q = z_pow(4);
  out.require(!decompose_once(p, 2).has_value(), "z^4+z splits with r = 2");
  out.require(complete_decomposition(p).length() == 1, "l(z^4+z) ≠ 1");
  out.require(complete_decomposition(q).length() == 2, "l(z^4) ≠ 2");
  const Character length = LengthChar{std::string("e")};
  const Character degree = DegreeChar{1};
  out.require(evaluate(degree, p) == evaluate(degree, q), "degree character differs on equal degrees");
  out.require(!(evaluate(length, p) == evaluate(length, q)), "length character agrees on z^4+z and z^4");
  if (out.pass) out.detail << "deg(z^4+z) = deg(z^4) = 4 but l = 1 vs 2";
}

// Invariant of the bi-orbit of a quartic or quintic: p̂_{n-3}^2 / p̂_{n-2}^3
// (with its zero pattern), unchanged by z ↦ αz rescaling of the normal form.
std::pair<std::vector<bool>, Gaussian> quartic_invariant(const Poly& p) {
  const Poly hat = normal_form(p).hat;
  const int n = p.degree();
  std::vector<bool> zeros;
  for (int k = 1; k <= n - 2; ++k) zeros.push_back(hat.coeff(k).is_zero());
  const Gaussian a = hat.coeff(n - 3), b = hat.coeff(n - 2);
  return {zeros, b.is_zero() ? Gaussian(0) : a * a / (b * b * b)};
}

void equivalence(Outcome& out, std::uint64_t seed) {
  Sampler s(seed);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly p = s.poly(s.uniform(2, 5), 3, 2);
    const Poly q = compose(s.affine(), compose(p, s.affine()));
    const auto w = affine_biequiv(p, q);
    out.require(w && compose(w->A, compose(p, w->B)) == q, "pair " + std::to_string(trial) + " not recovered");
  }
  int non_pairs = 0;
  while (non_pairs < 100) {
    const int n = s.uniform(4, 5);
    const Poly p = s.poly(n, 3, 2);
    const Poly q = compose(s.affine(), compose(p, s.affine()));
    std::vector<Gaussian> c = q.coeffs();
    c[static_cast<std::size_t>(s.uniform(1, n - 2))] += s.nonzero_gaussian();
    const Poly perturbed(std::move(c));
    if (quartic_invariant(perturbed) == quartic_invariant(p)) continue;  // perturbation stayed in the orbit
    out.require(!affine_biequiv(p, perturbed).has_value(),
                "non-pair " + std::to_string(non_pairs) + " returned a witness");
    out.require(biequiv_witnesses(p, perturbed).empty(), "non-pair candidate verified");
    ++non_pairs;
  }
  if (out.pass) out.detail << "100 constructed pairs recovered, 100 perturbed non-pairs rejected";
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

void schreier(Outcome& out, std::uint64_t) {
  for (int n = 2; n <= 3; ++n) {
    const std::vector<FiniteCorr> corr = all_correspondences(n);
    for (const FiniteCorr& k1 : corr) {
      for (const FiniteCorr& k2 : corr) {
        if (k2.is_surjective() && compose(k1, k2).is_map()) {
          out.require(k1.is_map(), "maps.corr fails for n = " + std::to_string(n) + ": K1 = " + k1.to_string());
        }
      }
    }
    std::vector<std::vector<int>> tables;
    for (const FiniteCorr& k : corr) tables.push_back(alpha(k));
    std::sort(tables.begin(), tables.end());
    out.require(std::adjacent_find(tables.begin(), tables.end()) == tables.end(),
                "alpha is not injective for n = " + std::to_string(n));
    const auto ideal = minimal_ideal(n);
    for (std::size_t c = 0; c < ideal.size(); ++c) {
      const auto t = alpha(ideal[c]);
      out.require(std::all_of(t.begin(), t.end(), [&](int v) { return v == static_cast<int>(c); }),
                  "alpha(c) ≠ c on the minimal ideal");
    }
    const auto autos = enumerate_automorphisms(n, Ambient::MapX);
    out.require(static_cast<long>(autos.size()) == factorial(n),
                "|Aut(Map(X))| = " + std::to_string(autos.size()) + " for n = " + std::to_string(n));
    for (const HomTable& phi : autos) {
      const SchreierReport r = schreier_extract(phi);
      out.require(r.bijective && r.conjugation, "automorphism is not conjugation by its extracted bijection");
    }
  }
  const auto witness = non_prime_witness(3);
  out.require(witness.has_value(), "no non-prime witness for n = 3");
  if (out.pass) {
    out.detail << "maps.corr and alpha exhaustive for n = 2, 3; |Aut(Map)| = 2, 6, all inner; non-prime witness g1 = "
               << witness->first.to_string() << ", g2 = " << witness->second.to_string();
  }
}

void correspondences(Outcome& out, std::uint64_t seed) {
  Sampler s(seed);
  for (int trial = 0; trial < 50; ++trial) {
    const RatFun f = s.ratfun(3, 2), g = s.ratfun(3, 2);
    const HolCorr composed = compose(graph(f), graph(g));
    out.require(composed == graph(f.compose(g)), "graph functoriality fails at trial " + std::to_string(trial));
  }
  int checked = 0;
  for (int trial = 0; checked < 50 && trial < 500; ++trial) {
    auto random_corr = [&] {
      const int d = s.uniform(1, 2);
      std::vector<RatFun> c;
      for (int k = 0; k < d; ++k) c.push_back(s.ratfun(2, 2));
      c.emplace_back(1);
      return HolCorr(BiPoly(std::move(c)));
    };
    const HolCorr k1 = random_corr(), k2 = random_corr();
    try {
      const HolCorr k = compose(k2, k1);
      out.require(k.degree() <= k1.degree() * k2.degree(), "degree bound fails at trial " + std::to_string(trial));
      ++checked;
    } catch (const DomainError&) {
      // degenerate pair (shared component); draw another
    }
  }
  out.require(checked == 50, "too many degenerate random pairs");
  // Res_W(W - z^2, U - W - 1) = U - z^2 - 1.
  const BiPoly f(std::vector<RatFun>{RatFun(make_poly({0, 0, -1})), RatFun(1)});
  const WUPoly g(std::vector<BiPoly>{BiPoly(std::vector<RatFun>{RatFun(-1), RatFun(1)}),
                                     BiPoly(std::vector<RatFun>{RatFun(-1)})});
  const BiPoly expected(std::vector<RatFun>{RatFun(make_poly({-1, 0, -1})), RatFun(1)});
  out.require(resultant_in_W(lift(f), g) == expected, "Res_W(W-z^2, U-W-1) ≠ U-z^2-1");
  if (out.pass) out.detail << "50 graph compositions exact, 50 degree bounds, worked resultant reproduced";
}

void orbits(Outcome& out, std::uint64_t) {
  const RatFun z2(make_poly({0, 0, 1}));
  const RatFun z2m1(make_poly({-1, 0, 1}));
  const OrbitReport a = exact_orbit(z2m1, Gaussian(0));
  const OrbitReport b = exact_orbit(z2, Gaussian(1));
  const OrbitReport c = exact_orbit(z2, Gaussian(2));
  const OrbitReport d = float_orbit(z2, {0.5, 0.0});
  out.require(std::holds_alternative<FiniteExact>(a) && std::get<FiniteExact>(a) == FiniteExact{0, 2},
              "z^2-1 at 0: " + describe(a));
  out.require(std::holds_alternative<FiniteExact>(b) && std::get<FiniteExact>(b) == FiniteExact{0, 1},
              "z^2 at 1: " + describe(b));
  out.require(std::holds_alternative<InfiniteCertified>(c), "z^2 at 2: " + describe(c));
  const auto* attracted = std::get_if<AttractedNumeric>(&d);
  out.require(attracted && attracted->multiplier_modulus < 1e-6, "z^2 at 0.5: " + describe(d));
  if (out.pass) out.detail << describe(a) << "; " << describe(b) << "; " << describe(c) << "; " << describe(d);
}

void renderer(Outcome& out, std::uint64_t) {
  const RatFun z2(make_poly({0, 0, 1}));
  RenderOptions opts;
  opts.nx = opts.ny = 512;
  opts.max_iter = 200;
  const Region region{Gaussian(0), Rational(4), Rational(4)};
  const GridClassification g1 = render(z2, region, opts);
  opts.threads = 3;
  const GridClassification g2 = render(z2, region, opts);
  long outside = 0, outside_escape = 0, inside = 0, inside_attracted = 0, undecided = 0, stray = 0;
  for (int j = 0; j < g1.ny; ++j) {
    for (int i = 0; i < g1.nx; ++i) {
      const double r = std::abs(g1.cell_center(i, j).to_complex());
      const CellClass c = g1.cells[static_cast<std::size_t>(j) * g1.nx + i];
      if (r > 1.05) {
        ++outside;
        outside_escape += c == CellClass::Escape;
      } else if (r < 0.95) {
        ++inside;
        inside_attracted += c == CellClass::Attracted;
      }
      if (c == CellClass::Undecided) {
        ++undecided;
        stray += r < 0.95 || r > 1.05;
      }
    }
  }
  out.require(outside_escape >= 0.99 * static_cast<double>(outside), "too few ESCAPE cells outside");
  out.require(inside_attracted >= 0.99 * static_cast<double>(inside), "too few ATTRACTED cells inside");
  out.require(undecided > 0, "UNDECIDED set is empty");
  out.require(stray == 0, std::to_string(stray) + " UNDECIDED cells outside the annulus");
  out.require(g1.cells == g2.cells, "runs with different thread counts differ");
  if (out.pass) {
    out.detail << "ESCAPE " << outside_escape << "/" << outside << ", ATTRACTED " << inside_attracted << "/" << inside
               << ", UNDECIDED " << undecided << " all in the annulus, runs identical";
  }
}

void sandwich(Outcome& out, std::uint64_t seed) {
  Sampler s(seed);
  for (int trial = 0; trial < 100; ++trial) {
    const SandwichSemigroup<Poly> sg{s.poly(s.uniform(0, 2), 2, 2)};
    const Poly f = s.poly(s.uniform(0, 2), 2, 2), h = s.poly(s.uniform(0, 2), 2, 2), k = s.poly(s.uniform(0, 2), 2, 2);
    out.require(sandwich_compose(sg, sandwich_compose(sg, f, h), k) == sandwich_compose(sg, f, sandwich_compose(sg, h, k)),
                "sandwich product not associative at trial " + std::to_string(trial));
  }
  const AffineMap f(Gaussian(1), Gaussian(1));
  const AffineMap B = AffineMap::identity();
  const SandwichIsomorphism phi(f, B, make_poly({0, 0, 1}));
  out.require(phi.target_kernel() == make_poly({2, -2, 1}), "kernel for (z+1, Id, z^2) ≠ z^2-2z+2");
  std::vector<std::pair<Poly, Poly>> samples;
  for (int trial = 0; trial < 100; ++trial) samples.emplace_back(s.poly(s.uniform(0, 3), 2, 2), s.poly(s.uniform(0, 3), 2, 2));
  try {
    phi.verify_law(samples);
  } catch (const DomainError& e) {
    out.require(false, e.what());
  }
  out.require(phi(Poly::variable()) == B.inverse().as_poly(), "Φ(Id) ≠ B⁻¹");
  if (out.pass) out.detail << "100 associativity triples, 100 homomorphism pairs, Φ(Id) = B⁻¹";
}

struct Criterion {
  const char* name;
  void (*run)(Outcome&, std::uint64_t);
};

const Criterion kCriteria[kCriterionCount] = {
    {"ritt-invariance", ritt_invariance},
    {"ritt-identities", ritt_identities},
    {"character-multiplicativity", character_multiplicativity},
    {"length-vs-degree", length_vs_degree},
    {"affine-equivalence", equivalence},
    {"finite-schreier", schreier},
    {"correspondence-algebra", correspondences},
    {"orbit-classification", orbits},
    {"renderer", renderer},
    {"sandwich-laws", sandwich},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id out of range");
  const Criterion& c = kCriteria[id - 1];
  Outcome out;
  try {
    c.run(out, seed + static_cast<std::uint64_t>(id));
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  return {id, c.name, out.pass, out.detail.str()};
}

std::vector<CriterionResult> run_suite(const std::vector<int>& only, std::uint64_t seed) {
  std::vector<int> ids = only;
  if (ids.empty()) {
    ids.resize(kCriterionCount);
    std::iota(ids.begin(), ids.end(), 1);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<CriterionResult> results;
  for (int id : ids) results.push_back(run_criterion(id, seed));
  return results;
}

}  // namespace rittforge
