#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rittforge {

/// Dense univariate polynomial over a commutative ring R, coefficients in
/// ascending degree with no stored leading zeros (the zero polynomial has no
/// coefficients). R must be default-constructible to zero, constructible from
/// an integer, and expose is_zero(). Division-based members additionally need
/// R to be a field.
template <class R>
class DensePoly {
 public:
  using coefficient_type = R;

  DensePoly() = default;
  explicit DensePoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  /// Constant polynomial; lets DensePoly itself serve as a coefficient ring.
  explicit DensePoly(long c) : coeffs_{R(c)} { trim(); }

  static DensePoly constant(R c) { return DensePoly(std::vector<R>{std::move(c)}); }
  static DensePoly monomial(R c, int k) {
    std::vector<R> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return DensePoly(std::move(v));
  }
  /// The identity polynomial z.
  static DensePoly variable() { return monomial(R(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  R coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(k)] : R();
  }
  const R& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  /// Exponent of the lowest nonzero term; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    }
    return -1;
  }

  R operator()(const R& x) const {
    R acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// this ∘ inner, i.e. this evaluated at inner (Horner).
  DensePoly compose(const DensePoly& inner) const {
    DensePoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  DensePoly pow(unsigned exponent) const {
    DensePoly result = constant(R(1));
    DensePoly base = *this;
    while (exponent != 0) {
      if (exponent & 1U) result = result * base;
      exponent >>= 1;
      if (exponent != 0) base = base * base;
    }
    return result;
  }

  DensePoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<R> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * R(static_cast<long>(k));
    return DensePoly(std::move(d));
  }

  DensePoly scaled(const R& c) const {
    std::vector<R> v = coeffs_;
    for (auto& x : v) x = x * c;
    return DensePoly(std::move(v));
  }

  // ---- field-only members ------------------------------------------------

  /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
  std::pair<DensePoly, DensePoly> divmod(const DensePoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<R> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {DensePoly(), *this};
    std::vector<R> quot(static_cast<std::size_t>(degree() - dd) + 1);
    const R& lead = divisor.leading();
    for (int k = degree(); k >= dd; --k) {
      const R& top = rem[static_cast<std::size_t>(k)];
      if (top.is_zero()) continue;
      R factor = top / lead;
      for (int j = 0; j <= dd; ++j) {
        auto& slot = rem[static_cast<std::size_t>(k - dd + j)];
        slot = slot - factor * divisor.coeffs_[static_cast<std::size_t>(j)];
      }
      quot[static_cast<std::size_t>(k - dd)] = std::move(factor);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
  }

  /// Quotient of an exact division; throws when the remainder is nonzero.
  DensePoly exact_div(const DensePoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

  DensePoly monic() const {
    if (is_zero()) return {};
    const R lead = leading();
    std::vector<R> v = coeffs_;
    for (auto& x : v) x = x / lead;
    return DensePoly(std::move(v));
  }

  /// Monic greatest common divisor (zero only when both inputs are zero).
  static DensePoly gcd(DensePoly a, DensePoly b) {
    // Monic remainders keep coefficient growth in check over Q(i).
    b = b.monic();
    while (!b.is_zero()) {
      DensePoly r = a.divmod(b).second.monic();
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // ---- ring operations ---------------------------------------------------

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<R> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k < a.coeffs_.size() && k < b.coeffs_.size()) {
        v[k] = a.coeffs_[k] + b.coeffs_[k];
      } else {
        v[k] = k < a.coeffs_.size() ? a.coeffs_[k] : b.coeffs_[k];
      }
    }
    return DensePoly(std::move(v));
  }

  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

  DensePoly operator-() const {
    std::vector<R> v = coeffs_;
    for (auto& x : v) x = -x;
    return DensePoly(std::move(v));
  }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePoly(std::move(v));
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

/// Determinant of the Sylvester matrix of f and g (leading coefficients first,
/// deg g rows of f followed by deg f rows of g), computed by fraction-free
/// Bareiss elimination. `exact_div(a, b)` must return a / b for divisions that
/// are exact in R.
template <class R, class ExactDiv>
R sylvester_resultant(const DensePoly<R>& f, const DensePoly<R>& g, ExactDiv exact_div) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of a zero polynomial");
  const int m = f.degree();
  const int n = g.degree();
  const int size = m + n;
  if (size == 0) return R(1);
  std::vector<std::vector<R>> a(static_cast<std::size_t>(size), std::vector<R>(static_cast<std::size_t>(size)));
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k <= m; ++k) a[row][row + k] = f.coeff(m - k);
  }
  for (int row = 0; row < m; ++row) {
    for (int k = 0; k <= n; ++k) a[n + row][row + k] = g.coeff(n - k);
  }
  bool negate = false;
  R previous(1);
  for (int k = 0; k + 1 < size; ++k) {
    if (a[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < size; ++r) {
        if (!a[r][k].is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return R();
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        R t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_div(t, previous);
      }
      a[i][k] = R();
    }
    previous = a[k][k];
  }
  R det = a[size - 1][size - 1];
  return negate ? -det : det;
}

}  // namespace rittforge
