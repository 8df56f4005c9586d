#include "rittforge/affine.hpp"

#include "rittforge/errors.hpp"

namespace rittforge {

AffineMap::AffineMap(Gaussian a, Gaussian b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero()) throw DomainError("affine map with zero linear coefficient");
}

AffineMap AffineMap::from_poly(const Poly& p) {
  if (p.degree() != 1) throw DomainError("not an affine polynomial: " + to_expression(p));
  return {p.coeff(1), p.coeff(0)};
}

AffineMap AffineMap::inverse() const {
  const Gaussian inv = a_.inverse();
  return {inv, -b_ * inv};
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return {f.a() * g.a(), f.a() * g.b() + f.b()};
}

Poly compose(const AffineMap& f, const Poly& p) {
  return p.scaled(f.a()) + Poly::constant(f.b());
}

Poly compose(const Poly& p, const AffineMap& f) { return poly_compose(p, f.as_poly()); }

}  // namespace rittforge
