#pragma once

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rittforge {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: integer literals convert
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(const mpq_class& q);

  /// Accepts "p", "p/q", and decimals such as "-1.25" or "3e-2".
  static Rational parse(std::string_view text);
  /// Exact value of a finite double.
  static Rational from_double(double value);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }
  /// Largest bit length of numerator and denominator.
  std::size_t bit_size() const;
  /// Always "p/q", including "n/1" for integers.
  std::string to_string() const;

  Rational abs() const;
  Rational inverse() const;
  Rational pow(long exponent) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of Q(i). Field arithmetic is exact; division by zero throws
/// std::domain_error.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long re) : re_(re) {}               // NOLINT
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }
  /// Accepts "p/q", "p/q+r/s i", "p/q-r/s i", "r/s i" and decimal parts.
  static Gaussian parse(std::string_view text);
  static Gaussian from_complex(std::complex<double> z);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_ == Rational(1); }

  Gaussian conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gaussian inverse() const;
  Gaussian pow(long exponent) const;
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::size_t bit_size() const;
  /// "p/q" when real, otherwise "p/q+r/s i" / "p/q-r/s i".
  std::string to_string() const;

  Gaussian& operator+=(const Gaussian& rhs);
  Gaussian& operator-=(const Gaussian& rhs);
  Gaussian& operator*=(const Gaussian& rhs);
  Gaussian& operator/=(const Gaussian& rhs);

  friend Gaussian operator+(Gaussian lhs, const Gaussian& rhs) { return lhs += rhs; }
  friend Gaussian operator-(Gaussian lhs, const Gaussian& rhs) { return lhs -= rhs; }
  friend Gaussian operator*(Gaussian lhs, const Gaussian& rhs) { return lhs *= rhs; }
  friend Gaussian operator/(Gaussian lhs, const Gaussian& rhs) { return lhs /= rhs; }
  Gaussian operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Gaussian& z);

/// Deterministic total order used for tie-breaking between exact witnesses:
/// real values before non-real ones, then by (denominator, |numerator|, sign)
/// of the real part, then the same key on the imaginary part.
bool canonical_less(const Gaussian& a, const Gaussian& b);

struct RationalHash {
  std::size_t operator()(const Rational& r) const;
};

struct GaussianHash {
  std::size_t operator()(const Gaussian& z) const;
};

}  // namespace rittforge
