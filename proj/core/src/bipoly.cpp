#include "rittforge/bipoly.hpp"

#include "rittforge/errors.hpp"

namespace rittforge {

namespace {

// Polynomials in U with coefficients in Q(i)[z]: a domain without division,
// where Bareiss elimination needs no gcds.
using ZUPoly = DensePoly<Poly>;

Poly lcm(const Poly& a, const Poly& b) { return (a * b).exact_div(Poly::gcd(a, b)).monic(); }

// Long division that is exact in Q(i)[z][U]; every leading-coefficient
// quotient is then exact in Q(i)[z].
ZUPoly exact_div_zu(const ZUPoly& a, const ZUPoly& b) {
  if (a.is_zero()) return {};
  const int db = b.degree();
  if (a.degree() < db) throw DomainError("inexact division in the resultant");
  std::vector<Poly> rem = a.coeffs();
  std::vector<Poly> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    const Poly top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    Poly q = top.exact_div(b.leading());
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k - db + j)];
      slot = slot - q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(k - db)] = std::move(q);
  }
  for (int k = 0; k < db; ++k) {
    if (!rem[static_cast<std::size_t>(k)].is_zero()) throw DomainError("inexact division in the resultant");
  }
  return ZUPoly(std::move(quot));
}

// f·L with L the least common denominator of every coefficient.
DensePoly<ZUPoly> cleared(const WUPoly& f, Poly& denominator) {
  denominator = Poly::constant(Gaussian(1));
  for (const BiPoly& c : f.coeffs()) denominator = lcm(denominator, common_denominator(c));
  std::vector<ZUPoly> out;
  for (const BiPoly& c : f.coeffs()) {
    std::vector<Poly> in_u;
    for (const RatFun& r : c.coeffs()) in_u.push_back(r.num() * denominator.exact_div(r.den()));
    out.emplace_back(std::move(in_u));
  }
  return DensePoly<ZUPoly>(std::move(out));
}

}  // namespace

WUPoly lift(const BiPoly& f) {
  std::vector<BiPoly> coeffs;
  coeffs.reserve(f.coeffs().size());
  for (const RatFun& c : f.coeffs()) coeffs.push_back(BiPoly::constant(c));
  return WUPoly(std::move(coeffs));
}

namespace {

// Res(Lf·f, Lg·g) = Lf^deg(g) · Lg^deg(f) · Res(f, g) with Lf, Lg free of W;
// returns the left side and stores the scale factor.
ZUPoly cleared_resultant(const WUPoly& f, const WUPoly& g, Poly& scale) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  Poly lf, lg;
  const auto fc = cleared(f, lf);
  const auto gc = cleared(g, lg);
  scale = lf.pow(static_cast<unsigned>(g.degree())) * lg.pow(static_cast<unsigned>(f.degree()));
  return sylvester_resultant(fc, gc, exact_div_zu);
}

}  // namespace

BiPoly resultant_in_W(const WUPoly& f, const WUPoly& g) {
  Poly scale;
  const ZUPoly r = cleared_resultant(f, g, scale);
  std::vector<RatFun> coeffs;
  for (const Poly& c : r.coeffs()) coeffs.emplace_back(c, scale);
  return BiPoly(std::move(coeffs));
}

BiPoly monic_resultant_in_W(const WUPoly& f, const WUPoly& g) {
  Poly scale;
  const ZUPoly r = cleared_resultant(f, g, scale);
  if (r.is_zero()) return {};
  std::vector<RatFun> coeffs;
  for (const Poly& c : r.coeffs()) coeffs.emplace_back(c, r.leading());
  return BiPoly(std::move(coeffs));
}

RatFun resultant_in_W(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  return sylvester_resultant(f, g, [](const RatFun& a, const RatFun& b) { return a / b; });
}

Poly common_denominator(const BiPoly& f) {
  Poly l = Poly::constant(Gaussian(1));
  for (const RatFun& c : f.coeffs()) {
    if (c.den().degree() == 0) continue;
    l = (l * c.den()).exact_div(Poly::gcd(l, c.den()));
  }
  return l;
}

std::optional<Poly> specialize(const BiPoly& f, const Gaussian& z0) {
  std::vector<Gaussian> values;
  values.reserve(f.coeffs().size());
  for (const RatFun& c : f.coeffs()) {
    auto v = c.eval(z0);
    if (!v) return std::nullopt;
    values.push_back(*v);
  }
  return Poly(std::move(values));
}

std::string to_expression(const BiPoly& f, char variable) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const RatFun& c = f.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c == RatFun(1);
    if (!unit || k == 0) out += "(" + to_expression(c) + ")";
    if (k >= 1) out += variable;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace rittforge
