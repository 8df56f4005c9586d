#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rittforge/poly.hpp"

namespace rittforge {

/// Base of a PowerOfBase value: a symbolic tag such as "e", or an exact number.
using CharBase = std::variant<std::string, Gaussian>;

std::string base_to_string(const CharBase& b);

/// Value of a character: Zero, an exact number, or base^exponent with the
/// base possibly symbolic.
class CharValue {
 public:
  struct Zero {
    friend bool operator==(const Zero&, const Zero&) = default;
  };
  struct Exact {
    Gaussian value;
    friend bool operator==(const Exact&, const Exact&) = default;
  };
  struct PowerOfBase {
    CharBase base;
    long exponent = 0;
    friend bool operator==(const PowerOfBase&, const PowerOfBase&) = default;
  };
  using Variant = std::variant<Zero, Exact, PowerOfBase>;

  CharValue() : value_(Zero{}) {}
  CharValue(Variant v) : value_(std::move(v)) {}  // NOLINT

  static CharValue zero() { return {Zero{}}; }
  static CharValue exact(Gaussian g) { return {Exact{std::move(g)}}; }
  static CharValue power(CharBase base, long exponent) { return {PowerOfBase{std::move(base), exponent}}; }

  const Variant& get() const { return value_; }
  bool is_zero() const;

  /// Semantic normal form: base^0 is 1, an exact base is expanded, 0 is Zero.
  CharValue canonical() const;

  /// Throws DomainError when the factors have incompatible symbolic bases.
  friend CharValue operator*(const CharValue& a, const CharValue& b);
  /// Equality of the represented values.
  friend bool operator==(const CharValue& a, const CharValue& b);

  std::string to_string() const;

 private:
  Variant value_;
};

/// deg(p)^s.
struct DegreeChar {
  int s = 1;
};
/// base^l(p), l the length of a prime decomposition.
struct LengthChar {
  CharBase base = std::string("e");
};
/// a^n on the semigroup generated by the bi-orbit of P, i.e. on compositions
/// of n maps A∘P∘B; Zero elsewhere. P must be prime.
struct AffineOrbitChar {
  Poly P;
  CharBase a;
};
/// Values on primes, extended multiplicatively along the computed prime
/// decomposition. Primes absent from the table take the value Zero.
struct PrimeTable {
  std::vector<std::pair<Poly, CharValue>> table;
};
using Character = std::variant<DegreeChar, LengthChar, AffineOrbitChar, PrimeTable>;

/// Constants map to Zero and affine maps to 1 for every character.
CharValue evaluate(const Character& chi, const Poly& p);

struct MultiplicativityViolation {
  Poly p;
  Poly q;
  CharValue composed;  ///< χ(p ∘ q)
  CharValue product;   ///< χ(p)·χ(q)
};

std::vector<MultiplicativityViolation> verify_multiplicative(const Character& chi,
                                                             const std::vector<std::pair<Poly, Poly>>& samples);

struct PrimeQuadruple {
  Poly P1, P2, P3, P4;
};

struct PrimeDataReport {
  std::vector<std::size_t> violating_quadruples;  ///< indices into the input
  std::vector<Poly> nonzero_constants;
  bool consistent() const { return violating_quadruples.empty() && nonzero_constants.empty(); }
};

/// Checks φ(P1)·φ(P2) = φ(P3)·φ(P4) for every quadruple and φ(c) = 0 for the
/// constants listed in the table. Throws DomainError when P1∘P2 ≠ P3∘P4.
PrimeDataReport check_prime_data(const PrimeTable& table, const std::vector<PrimeQuadruple>& quadruples);

}  // namespace rittforge
