#include "rittforge/ratfun.hpp"

#include <stdexcept>

namespace rittforge {

RatFun::RatFun(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(Gaussian(1));
    return;
  }
  if (den.degree() > 0) {
    const Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  const Gaussian lead = den.leading();
  if (lead.is_one()) {
    num_ = std::move(num);
    den_ = std::move(den);
  } else {
    const Gaussian scale = lead.inverse();
    num_ = num.scaled(scale);
    den_ = den.scaled(scale);
  }
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("division by the zero rational function");
  return RatFun(den_, num_);
}

RatFun RatFun::compose(const RatFun& inner) const {
  // num(inner)/den(inner) with both sides homogenized by inner's denominator.
  const int d = degree();
  const Poly& p = inner.num_;
  const Poly& q = inner.den_;
  auto homogenize = [&](const Poly& f) {
    Poly acc;
    std::vector<Poly> q_powers(static_cast<std::size_t>(d) + 1);
    q_powers[0] = Poly::constant(Gaussian(1));
    for (int k = 1; k <= d; ++k) q_powers[static_cast<std::size_t>(k)] = q_powers[static_cast<std::size_t>(k) - 1] * q;
    Poly p_power = Poly::constant(Gaussian(1));
    for (int k = 0; k <= f.degree(); ++k) {
      if (!f.coeff(k).is_zero()) {
        acc = acc + (p_power * q_powers[static_cast<std::size_t>(d - k)]).scaled(f.coeff(k));
      }
      p_power = p_power * p;
    }
    return acc;
  };
  return RatFun(homogenize(num_), homogenize(den_));
}

std::optional<Gaussian> RatFun::eval(const Gaussian& x) const {
  const Gaussian d = den_(x);
  if (d.is_zero()) return std::nullopt;
  return num_(x) / d;
}

std::optional<Gaussian> RatFun::value_at_infinity() const {
  if (num_.degree() > den_.degree()) return std::nullopt;
  if (num_.degree() < den_.degree()) return Gaussian(0);
  return num_.leading() / den_.leading();
}

std::complex<double> RatFun::eval_complex(std::complex<double> z) const {
  return rittforge::eval_complex(num_, z) / rittforge::eval_complex(den_, z);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) {
    RatFun r;
    r.num_ = a.num_ * b.num_;  // both denominators are the constant 1
    return r;
  }
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string to_expression(const RatFun& r) {
  if (r.is_polynomial()) return to_expression(r.num());
  return "(" + to_expression(r.num()) + ")/(" + to_expression(r.den()) + ")";
}

}  // namespace rittforge
