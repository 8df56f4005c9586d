#pragma once

#include "rittforge/dense_poly.hpp"
#include "rittforge/ratfun.hpp"

namespace rittforge {

/// Polynomial in one variable (W, or U after elimination) with coefficients
/// in Q(i)(z).
using BiPoly = DensePoly<RatFun>;

/// Polynomial in W whose coefficients are BiPolys in a second variable U.
/// Used to eliminate W between two correspondences.
using WUPoly = DensePoly<BiPoly>;

/// Embeds f(z, W) as a WUPoly with coefficients constant in U.
WUPoly lift(const BiPoly& f);

/// Resultant in W of f(z, W) and g(z, W, U): a polynomial in U over Q(i)(z).
/// Throws DomainError when either input is zero.
BiPoly resultant_in_W(const WUPoly& f, const WUPoly& g);

/// The same resultant divided by its leading coefficient in U; zero when the
/// resultant vanishes. Cheaper than normalizing resultant_in_W afterwards.
BiPoly monic_resultant_in_W(const WUPoly& f, const WUPoly& g);

/// Resultant in W of two polynomials without a second variable.
RatFun resultant_in_W(const BiPoly& f, const BiPoly& g);

/// Least common multiple of the coefficient denominators (monic).
Poly common_denominator(const BiPoly& f);

/// Evaluates every coefficient at z0; nullopt if z0 is a pole of one of them.
std::optional<Poly> specialize(const BiPoly& f, const Gaussian& z0);

std::string to_expression(const BiPoly& f, char variable = 'W');

}  // namespace rittforge
