#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "rittforge/affine.hpp"
#include "rittforge/poly.hpp"

namespace rittforge {

struct Split {
  Poly q;  ///< left factor, absorbs the leading coefficient of p
  Poly h;  ///< right factor, monic with h(0) = 0
};

/// Looks for p = q ∘ h with deg h = r. Throws DomainError unless deg p ≥ 2,
/// 2 ≤ r < deg p and r divides deg p; nullopt means no such split exists.
std::optional<Split> decompose_once(const Poly& p, int r);

/// True when deg p ≥ 2 and p admits no split with both degrees ≥ 2.
bool is_indecomposable(const Poly& p);

/// Ordered prime factors f_1, ..., f_n with p = f_1 ∘ ... ∘ f_n.
class Decomposition {
 public:
  /// Checks that every factor has degree ≥ 2 and is indecomposable.
  static Decomposition from_factors(std::vector<Poly> factors);
  /// Skips the primality check; for factors already known to be prime.
  static Decomposition trusted(std::vector<Poly> factors);

  const std::vector<Poly>& factors() const { return factors_; }
  std::size_t length() const { return factors_.size(); }
  Poly compose() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::vector<Poly> factors_;
};

/// Divisors of the current degree are tried in increasing order and the
/// first split wins; the left factor is decomposed recursively.
/// Throws DomainError when deg p ≤ 1.
Decomposition complete_decomposition(const Poly& p);

struct RittInvariants {
  std::size_t length = 0;
  std::vector<int> degree_multiset;  ///< sorted ascending
  friend bool operator==(const RittInvariants&, const RittInvariants&) = default;
};

RittInvariants ritt_invariants(const Decomposition& d);

/// Moves act on the adjacent pair (f_j, f_{j+1}); positions are 1-based.
struct AffineShuffle {
  int position = 1;
  AffineMap A;
  friend bool operator==(const AffineShuffle&, const AffineShuffle&) = default;
};
struct ChebyshevSwap {
  int position = 1;
  friend bool operator==(const ChebyshevSwap&, const ChebyshevSwap&) = default;
};
/// f_j = z^k and f_{j+1} = z^r·P(z^k) become z^r·P(z)^k followed by z^k.
struct MonomialSwap {
  int position = 1;
  int k = 2;
  int r = 0;
  friend bool operator==(const MonomialSwap&, const MonomialSwap&) = default;
};
using RittMove = std::variant<AffineShuffle, ChebyshevSwap, MonomialSwap>;

int move_position(const RittMove& m);

/// Moves applicable at position j. The AffineShuffle entry always appears,
/// carrying the identity as a placeholder for a caller-chosen map.
/// Throws DomainError when j is out of range.
std::vector<RittMove> available_moves(const Decomposition& d, int j);

/// Throws DomainError if the move does not apply.
Decomposition apply_move(const Decomposition& d, const RittMove& m);

/// The P with f = z^r·P(z^k), r = valuation of f; nullopt if f has another shape.
std::optional<Poly> monomial_cofactor(const Poly& f, int k);

/// True when p = z^k exactly for some k ≥ 2.
bool is_pure_power(const Poly& p);

}  // namespace rittforge
