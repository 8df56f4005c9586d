#pragma once

#include "rittforge/poly.hpp"

namespace rittforge {

/// z ↦ a·z + b with a ≠ 0.
class AffineMap {
 public:
  AffineMap() : a_(1), b_(0) {}
  /// Throws DomainError when a is zero.
  AffineMap(Gaussian a, Gaussian b);

  static AffineMap identity() { return {}; }
  static AffineMap translation(Gaussian c) { return {Gaussian(1), std::move(c)}; }
  /// Throws DomainError unless p has degree exactly 1.
  static AffineMap from_poly(const Poly& p);

  const Gaussian& a() const { return a_; }
  const Gaussian& b() const { return b_; }
  bool is_identity() const { return a_.is_one() && b_.is_zero(); }

  Gaussian apply(const Gaussian& z) const { return a_ * z + b_; }
  AffineMap inverse() const;
  Poly as_poly() const { return make_poly({b_, a_}); }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  Gaussian a_;
  Gaussian b_;
};

/// f ∘ g.
AffineMap compose(const AffineMap& f, const AffineMap& g);
/// A ∘ p.
Poly compose(const AffineMap& f, const Poly& p);
/// p ∘ A.
Poly compose(const Poly& p, const AffineMap& f);

inline AffineMap affine_inverse(const AffineMap& f) { return f.inverse(); }

}  // namespace rittforge
