#include "rittforge/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "rittforge/errors.hpp"

namespace rittforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Parses an optionally signed integer or decimal literal ("12", "-0.25", "1.5e3").
Rational parse_decimal(std::string_view s) {
  const std::string_view original = s;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) {
      throw ParseError("malformed exponent in number: " + std::string(original));
    }
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) || (int_part.empty() && frac_part.empty())) {
      throw ParseError("malformed number: " + std::string(original));
    }
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw ParseError("malformed number: " + std::string(original));
    digits = std::string(s);
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  exponent -= fraction_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) return Rational(num * scale, mpz_class(1));
  return Rational(num, scale);
}

std::size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(p->_mp_size) * 0x9e3779b97f4a7c15ULL;
  const int limbs = std::abs(p->_mp_size);
  for (int i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(p->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(s.substr(0, slash)));
    Rational den = parse_decimal(trim(s.substr(slash + 1)));
    if (den.is_zero()) throw ParseError("zero denominator in literal: " + std::string(s));
    return num / den;
  }
  return parse_decimal(s);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("cannot convert a non-finite double");
  return Rational(mpq_class(value));
}

std::size_t Rational::bit_size() const {
  return std::max(mpz_sizeinbase(num().get_mpz_t(), 2), mpz_sizeinbase(den().get_mpz_t(), 2));
}

std::string Rational::to_string() const { return num().get_str() + "/" + den().get_str(); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(den(), num());
}

Rational Rational::pow(long exponent) const {
  const unsigned long e = static_cast<unsigned long>(std::labs(exponent));
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
  Rational r(n, d);
  return exponent < 0 ? r.inverse() : r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Gaussian Gaussian::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty complex literal");
  if (s.back() != 'i') return Gaussian(Rational::parse(s));
  s.remove_suffix(1);
  s = trim(s);
  // Split at the last sign that is not the leading sign and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imaginary = [](std::string_view part) {
    part = trim(part);
    if (part.empty() || part == "+") return Rational(1);
    if (part == "-") return Rational(-1);
    if (part.front() == '+') part.remove_prefix(1);
    return Rational::parse(part);
  };
  if (split == std::string_view::npos) return Gaussian(Rational(0), imaginary(s));
  return Gaussian(Rational::parse(s.substr(0, split)), imaginary(s.substr(split)));
}

Gaussian Gaussian::from_complex(std::complex<double> z) {
  return {Rational::from_double(z.real()), Rational::from_double(z.imag())};
}

Gaussian Gaussian::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw std::domain_error("division by zero");
  return {re_ / n, -im_ / n};
}

Gaussian Gaussian::pow(long exponent) const {
  Gaussian base = exponent < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(std::labs(exponent));
  Gaussian result(1);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::size_t Gaussian::bit_size() const { return std::max(re_.bit_size(), im_.bit_size()); }

std::string Gaussian::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (im_.sign() > 0) return re_.to_string() + "+" + im_.to_string() + " i";
  return re_.to_string() + "-" + (-im_).to_string() + " i";
}

Gaussian& Gaussian::operator+=(const Gaussian& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& rhs) {
  if (im_.is_zero() && rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& rhs) {
  if (rhs.im_.is_zero()) {
    if (rhs.re_.is_zero()) throw std::domain_error("division by zero");
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  return *this *= rhs.inverse();
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << z.to_string(); }

bool canonical_less(const Gaussian& a, const Gaussian& b) {
  auto key = [](const Rational& r) {
    return std::make_tuple(mpz_class(r.den()), mpz_class(abs(r.num())), r.sign() < 0);
  };
  const bool a_complex = !a.is_real();
  const bool b_complex = !b.is_real();
  if (a_complex != b_complex) return b_complex;
  const auto ka = std::tuple_cat(key(a.re()), key(a.im()));
  const auto kb = std::tuple_cat(key(b.re()), key(b.im()));
  return ka < kb;
}

std::size_t RationalHash::operator()(const Rational& r) const {
  return hash_mpz(r.num()) * 31 + hash_mpz(r.den());
}

std::size_t GaussianHash::operator()(const Gaussian& z) const {
  RationalHash h;
  return h(z.re()) * 1000003ULL ^ h(z.im());
}

}  // namespace rittforge
