#include <benchmark/benchmark.h>

#include "rittforge/decompose.hpp"
#include "rittforge/equivalence.hpp"
#include "rittforge/hcorr.hpp"
#include "rittforge/julia.hpp"
#include "rittforge/random.hpp"

namespace {

using namespace rittforge;

void BM_CompleteDecomposition(benchmark::State& state) {
  Sampler s(1);
  const int degree = static_cast<int>(state.range(0));
  // (prime of degree 2) ∘ (prime of degree degree/2), dense small-height coefficients.
  const Poly p = poly_compose(s.poly(2), s.poly(degree / 2));
  for (auto _ : state) benchmark::DoNotOptimize(complete_decomposition(p));
}
BENCHMARK(BM_CompleteDecomposition)->Arg(6)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_AffineBiequiv(benchmark::State& state) {
  Sampler s(2);
  const Poly p = s.poly(static_cast<int>(state.range(0)));
  const Poly q = poly_compose(s.affine().as_poly(), poly_compose(p, s.affine().as_poly()));
  for (auto _ : state) benchmark::DoNotOptimize(affine_biequiv(p, q));
}
BENCHMARK(BM_AffineBiequiv)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_HcorrCompose(benchmark::State& state) {
  Sampler s(3);
  std::vector<RatFun> b1, b2;
  for (int i = 0; i < state.range(0); ++i) {
    b1.push_back(s.ratfun(2));
    b2.push_back(s.ratfun(2));
  }
  const HolCorr k1 = from_branches(b1);
  const HolCorr k2 = from_branches(b2);
  for (auto _ : state) benchmark::DoNotOptimize(compose(k2, k1));
}
BENCHMARK(BM_HcorrCompose)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Render(benchmark::State& state) {
  const RatFun map(parse_poly_expression("z^2-1"));
  RenderOptions options;
  options.nx = options.ny = static_cast<int>(state.range(0));
  options.max_iter = 200;
  options.threads = 1;
  const Region region{Gaussian(0), Rational(4), Rational(4)};
  for (auto _ : state) benchmark::DoNotOptimize(render(map, region, options));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_Render)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ExactOrbit(benchmark::State& state) {
  const RatFun map(parse_poly_expression("z^2-3/4"));
  const Gaussian a = Gaussian::parse("1/3+1/5i");
  for (auto _ : state) benchmark::DoNotOptimize(exact_orbit(map, a, ExactBudget{1000, 4096}));
}
BENCHMARK(BM_ExactOrbit)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
