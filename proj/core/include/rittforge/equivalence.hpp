#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rittforge/affine.hpp"
#include "rittforge/poly.hpp"
#include "rittforge/ratfun.hpp"

namespace rittforge {

/// Witness of q = A ∘ p ∘ B.
struct BiEquivWitness {
  AffineMap A;
  AffineMap B;
  friend bool operator==(const BiEquivWitness&, const BiEquivWitness&) = default;
};

/// p̂ = A ∘ p ∘ B is monic, has no z^{n-1} term and vanishes at 0.
struct NormalForm {
  AffineMap A;
  AffineMap B;
  Poly hat;
};

/// Throws DomainError when deg p < 2.
NormalForm normal_form(const Poly& p);

/// Every x in Q(i) with x^g = t, ordered by canonical_less.
std::vector<Gaussian> gaussian_roots(const Gaussian& t, int g);

/// All witnesses (A, B) with q = A ∘ p ∘ B over Q(i), each verified by
/// recomposition, ordered by the tie-break on (B.a, A.a, B.b, A.b). When the
/// solutions form an infinite family (p̂ = z^n) only the member with B.a = 1
/// relative to the normal forms is returned. Degree mismatch yields nothing.
std::vector<BiEquivWitness> biequiv_witnesses(const Poly& p, const Poly& q);

/// The tie-break-minimal witness, if any.
std::optional<BiEquivWitness> affine_biequiv(const Poly& p, const Poly& q);

/// Some affine f with f ∘ p ∘ f⁻¹ = q, or nullopt when none exists over Q(i).
std::optional<AffineMap> affine_conjugate(const Poly& p, const Poly& q);

/// Witnesses of p = A ∘ p ∘ B other than (Id, Id). For p bi-equivalent to
/// z^n the family is infinite and the representatives B.a ∈ {-1, i, -i}
/// (in normal coordinates) are returned.
std::vector<BiEquivWitness> has_symmetries(const Poly& p);

/// True when p is bi-equivalent to z^n, so its symmetries form an infinite family.
bool is_monomial_like(const Poly& p);

/// The semigroup with product f ∗_g h = f ∘ g ∘ h.
template <class Map>
struct SandwichSemigroup {
  Map g;
};

Poly sandwich_compose(const SandwichSemigroup<Poly>& s, const Poly& f, const Poly& h);
RatFun sandwich_compose(const SandwichSemigroup<RatFun>& s, const RatFun& f, const RatFun& h);

/// Φ(P) = f ∘ P ∘ f⁻¹ ∘ B⁻¹ from the sandwich semigroup with kernel P1 to the
/// one with kernel B ∘ f ∘ P1 ∘ f⁻¹.
class SandwichIsomorphism {
 public:
  SandwichIsomorphism(AffineMap f, AffineMap B, Poly P1);

  const Poly& source_kernel() const { return p1_; }
  const Poly& target_kernel() const { return p2_; }

  Poly operator()(const Poly& P) const;
  /// Throws DomainError at the first pair with Φ(P ∗ Q) ≠ Φ(P) ∗' Φ(Q).
  void verify_law(const std::vector<std::pair<Poly, Poly>>& samples) const;

 private:
  AffineMap f_;
  AffineMap B_;
  Poly p1_;
  Poly p2_;
};

}  // namespace rittforge
