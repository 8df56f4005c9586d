#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <string_view>

#include "rittforge/dense_poly.hpp"
#include "rittforge/rational.hpp"

namespace rittforge {

/// Exact univariate polynomial in z over Q(i).
using Poly = DensePoly<Gaussian>;

/// Ascending-degree convenience constructor: make_poly({c0, c1, c2}).
Poly make_poly(std::initializer_list<Gaussian> ascending);

/// p ∘ q (p evaluated at q). Constants absorb: c ∘ q = c.
Poly poly_compose(const Poly& p, const Poly& q);

Gaussian poly_eval(const Poly& p, const Gaussian& x);

std::complex<double> eval_complex(const Poly& p, std::complex<double> z);

/// Chebyshev polynomial with T_n(cos t) = cos(n t).
Poly chebyshev(int n);

/// Parses expressions such as "z^2-1", "0.25*z^3 + (1/2)z - i", "(z+1)^2".
/// Decimal literals are converted exactly; division is by constants only.
Poly parse_poly_expression(std::string_view text);

/// Human-readable rendering, highest degree first ("z^2 - 1").
std::string to_expression(const Poly& p);

}  // namespace rittforge
