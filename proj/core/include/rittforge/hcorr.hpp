#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "rittforge/bipoly.hpp"

namespace rittforge {

/// Finite holomorphic correspondence: z is related to the roots in W of a
/// polynomial monic in W with coefficients in Q(i)(z).
class HolCorr {
 public:
  /// Normalizes to monic. Throws DomainError when poly has W-degree < 1.
  explicit HolCorr(BiPoly poly, bool squarefree = false);

  const BiPoly& poly() const { return poly_; }
  /// Generic fiber size, counted with multiplicity unless squarefree.
  int degree() const { return poly_.degree(); }
  bool squarefree() const { return squarefree_; }

  friend bool operator==(const HolCorr& a, const HolCorr& b) { return a.poly_ == b.poly_; }

 private:
  BiPoly poly_;
  bool squarefree_;
};

/// ∏ (W - R_i). Throws DomainError on an empty list.
HolCorr from_branches(const std::vector<RatFun>& branches);
HolCorr graph(const RatFun& r);

/// Squarefree part in W over Q(i)(z).
BiPoly squarefree_part(const BiPoly& f);

/// k2 ∘ k1 (k1 first) by eliminating the middle variable with a resultant.
/// Throws DomainError when the resultant vanishes identically.
HolCorr compose(const HolCorr& k2, const HolCorr& k1, bool squarefree = false);

/// Swaps the roles of z and W; nullopt when the result does not involve W.
std::optional<HolCorr> inverse(const HolCorr& k);

/// Roots in W at z0, sorted by (real, imaginary). Throws DomainError when z0
/// is a pole of a coefficient.
std::vector<std::complex<double>> fiber(const HolCorr& k, std::complex<double> z0);

}  // namespace rittforge
