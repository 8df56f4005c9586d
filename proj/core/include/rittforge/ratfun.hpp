#pragma once

#include <complex>
#include <optional>

#include "rittforge/poly.hpp"

namespace rittforge {

/// Rational function num/den in canonical form: gcd(num, den) = 1 and den
/// monic, so two RatFuns are equal exactly when they are equal as functions.
class RatFun {
 public:
  RatFun() : den_(Poly::constant(Gaussian(1))) {}
  RatFun(long c) : RatFun(Poly::constant(Gaussian(c))) {}  // NOLINT: needed as a coefficient ring
  RatFun(Gaussian c) : RatFun(Poly::constant(std::move(c))) {}  // NOLINT
  RatFun(Poly p) : num_(std::move(p)), den_(Poly::constant(Gaussian(1))) {}  // NOLINT
  /// Throws std::domain_error when den is zero.
  RatFun(Poly num, Poly den);

  static RatFun variable() { return RatFun(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }
  /// max(deg num, deg den), the degree as a map of the sphere.
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  RatFun inverse() const;
  /// this ∘ inner.
  RatFun compose(const RatFun& inner) const;
  /// Exact value; nullopt at a pole.
  std::optional<Gaussian> eval(const Gaussian& x) const;
  /// Value at infinity; nullopt when infinity maps to infinity.
  std::optional<Gaussian> value_at_infinity() const;
  std::complex<double> eval_complex(std::complex<double> z) const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun operator-() const;
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

 private:
  Poly num_;
  Poly den_;
};

std::string to_expression(const RatFun& r);

}  // namespace rittforge
