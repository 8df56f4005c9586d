#pragma once

#include <cstdint>
#include <random>

#include "rittforge/affine.hpp"
#include "rittforge/ratfun.hpp"

namespace rittforge {

using Rng = std::mt19937_64;

/// RITTFORGE_SEED when set to an integer, otherwise a fixed default.
std::uint64_t default_seed();

/// Small-height samplers; numerators lie in [-bound, bound], denominators in [1, den_bound].
struct Sampler {
  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi);
  Rational rational(int bound = 3, int den_bound = 3);
  Rational nonzero_rational(int bound = 3, int den_bound = 3);
  /// Gaussian with an imaginary part about a quarter of the time.
  Gaussian gaussian(int bound = 3, int den_bound = 3);
  Gaussian nonzero_gaussian(int bound = 3, int den_bound = 3);
  /// Exactly the given degree (≥ 0); dense with probability `density`.
  Poly poly(int degree, int bound = 3, int den_bound = 2, double density = 1.0);
  AffineMap affine(int bound = 3, int den_bound = 2);
  /// Numerator and denominator degrees at most max_degree, denominator monic.
  RatFun ratfun(int max_degree, int bound = 3);

  Rng rng;
};

}  // namespace rittforge
