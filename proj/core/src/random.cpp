#include "rittforge/random.hpp"

#include <cstdlib>
#include <string>

namespace rittforge {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RITTFORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return 20240611;
}

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational Sampler::rational(int bound, int den_bound) {
  return {mpz_class(uniform(-bound, bound)), mpz_class(uniform(1, den_bound))};
}

Rational Sampler::nonzero_rational(int bound, int den_bound) {
  Rational r;
  do {
    r = rational(bound, den_bound);
  } while (r.is_zero());
  return r;
}

Gaussian Sampler::gaussian(int bound, int den_bound) {
  if (uniform(0, 3) == 0) return {rational(bound, den_bound), rational(bound, den_bound)};
  return {rational(bound, den_bound)};
}

Gaussian Sampler::nonzero_gaussian(int bound, int den_bound) {
  Gaussian g;
  do {
    g = gaussian(bound, den_bound);
  } while (g.is_zero());
  return g;
}

Poly Sampler::poly(int degree, int bound, int den_bound, double density) {
  std::vector<Gaussian> c(static_cast<std::size_t>(degree) + 1);
  std::bernoulli_distribution keep(density);
  for (int k = 0; k < degree; ++k) {
    if (keep(rng)) c[static_cast<std::size_t>(k)] = gaussian(bound, den_bound);
  }
  c.back() = nonzero_gaussian(bound, den_bound);
  return Poly(std::move(c));
}

AffineMap Sampler::affine(int bound, int den_bound) {
  return {nonzero_gaussian(bound, den_bound), gaussian(bound, den_bound)};
}

RatFun Sampler::ratfun(int max_degree, int bound) {
  Poly num = poly(uniform(0, max_degree), bound, 2);
  Poly den = poly(uniform(0, max_degree), bound, 2);
  return RatFun(std::move(num), std::move(den));
}

}  // namespace rittforge
