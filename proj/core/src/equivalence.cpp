#include "rittforge/equivalence.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>

#include "rittforge/errors.hpp"

namespace rittforge {

namespace {

// RAII holder for an mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
  ~Real() { mpfr_clear(value_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// All β in Z[i] with β^g = m, via high-precision complex roots rounded to the
// nearest lattice point and checked exactly.
std::vector<Gaussian> gaussian_integer_roots(const mpz_class& re, const mpz_class& im, int g) {
  const std::size_t bits = std::max(mpz_sizeinbase(re.get_mpz_t(), 2), mpz_sizeinbase(im.get_mpz_t(), 2));
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 96);
  Real x(prec), y(prec), radius(prec), theta(prec), phi(prec), two_pi(prec), c(prec), s(prec);
  mpfr_set_z(x.get(), re.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(y.get(), im.get_mpz_t(), MPFR_RNDN);
  mpfr_hypot(radius.get(), x.get(), y.get(), MPFR_RNDN);
  mpfr_rootn_ui(radius.get(), radius.get(), static_cast<unsigned long>(g), MPFR_RNDN);
  mpfr_atan2(theta.get(), y.get(), x.get(), MPFR_RNDN);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);

  const Gaussian target{Rational(re), Rational(im)};
  std::vector<Gaussian> roots;
  for (int k = 0; k < g; ++k) {
    mpfr_mul_ui(phi.get(), two_pi.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_add(phi.get(), phi.get(), theta.get(), MPFR_RNDN);
    mpfr_div_ui(phi.get(), phi.get(), static_cast<unsigned long>(g), MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), phi.get(), MPFR_RNDN);
    mpfr_mul(c.get(), c.get(), radius.get(), MPFR_RNDN);
    mpfr_mul(s.get(), s.get(), radius.get(), MPFR_RNDN);
    mpz_class a, b;
    mpfr_get_z(a.get_mpz_t(), c.get(), MPFR_RNDN);
    mpfr_get_z(b.get_mpz_t(), s.get(), MPFR_RNDN);
    Gaussian candidate{Rational(a), Rational(b)};
    if (candidate.pow(g) == target &&
        std::find(roots.begin(), roots.end(), candidate) == roots.end()) {
      roots.push_back(std::move(candidate));
    }
  }
  return roots;
}

bool witness_less(const BiEquivWitness& x, const BiEquivWitness& y) {
  const Gaussian* kx[] = {&x.B.a(), &x.A.a(), &x.B.b(), &x.A.b()};
  const Gaussian* ky[] = {&y.B.a(), &y.A.a(), &y.B.b(), &y.A.b()};
  for (int k = 0; k < 4; ++k) {
    if (canonical_less(*kx[k], *ky[k])) return true;
    if (canonical_less(*ky[k], *kx[k])) return false;
  }
  return false;
}

bool verifies(const Poly& p, const Poly& q, const BiEquivWitness& w) {
  return compose(w.A, compose(p, w.B)) == q;
}

// Data shared by the bi-equivalence and conjugacy searches: normal forms and
// the scalars α with q̂(z) = α^{-n}·p̂(αz). `free` means every α works.
struct AlphaSearch {
  NormalForm np;
  NormalForm nq;
  int n = 0;
  bool free = false;
  std::vector<Gaussian> alphas;
};

std::optional<AlphaSearch> alpha_search(const Poly& p, const Poly& q) {
  if (p.degree() < 2 || p.degree() != q.degree()) return std::nullopt;
  AlphaSearch s{normal_form(p), normal_form(q), p.degree(), false, {}};
  // Constraints α^e = t with e = n - k, one per nonzero middle coefficient.
  std::vector<std::pair<int, Gaussian>> constraints;
  for (int k = 1; k <= s.n - 2; ++k) {
    const Gaussian& pk = s.np.hat.coeff(k);
    const Gaussian& qk = s.nq.hat.coeff(k);
    if (pk.is_zero() != qk.is_zero()) return std::nullopt;
    if (!pk.is_zero()) constraints.emplace_back(s.n - k, pk / qk);
  }
  if (constraints.empty()) {
    s.free = true;
    return s;
  }
  // Extended Euclid on the exponents: α^g = t with g their gcd.
  int g = constraints[0].first;
  Gaussian t = constraints[0].second;
  for (std::size_t j = 1; j < constraints.size(); ++j) {
    const auto& [e, v] = constraints[j];
    long old_r = g, r = e, old_x = 1, x = 0, old_y = 0, y = 1;
    while (r != 0) {
      const long quotient = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - quotient * r);
      std::tie(old_x, x) = std::make_pair(x, old_x - quotient * x);
      std::tie(old_y, y) = std::make_pair(y, old_y - quotient * y);
    }
    t = t.pow(old_x) * v.pow(old_y);
    g = static_cast<int>(old_r);
  }
  for (Gaussian& alpha : gaussian_roots(t, g)) {
    bool ok = true;
    for (const auto& [e, v] : constraints) ok = ok && alpha.pow(e) == v;
    if (ok) s.alphas.push_back(std::move(alpha));
  }
  return s;
}

BiEquivWitness witness_for(const AlphaSearch& s, const Gaussian& alpha) {
  const AffineMap outer(alpha.pow(-s.n), Gaussian(0));
  const AffineMap inner(alpha, Gaussian(0));
  return {compose(s.nq.A.inverse(), compose(outer, s.np.A)), compose(s.np.B, compose(inner, s.nq.B.inverse()))};
}

}  // namespace

NormalForm normal_form(const Poly& p) {
  const int n = p.degree();
  if (n < 2) throw DomainError("normal form needs degree at least 2");
  const AffineMap B(Gaussian(1), -p.coeff(n - 1) / (Gaussian(n) * p.leading()));
  const Poly shifted = compose(p, B);
  const AffineMap A = AffineMap(shifted.leading(), shifted.coeff(0)).inverse();
  return {A, B, compose(A, shifted)};
}

std::vector<Gaussian> gaussian_roots(const Gaussian& t, int g) {
  if (g < 1) throw DomainError("root index must be positive");
  if (t.is_zero()) return {Gaussian(0)};
  // With E the common denominator, (E·x)^g = E^g·t is a Gaussian integer, so
  // E·x is an algebraic integer of Q(i), i.e. lies in Z[i].
  const mpz_class E = lcm(t.re().den(), t.im().den());
  mpz_class Eg;
  mpz_pow_ui(Eg.get_mpz_t(), E.get_mpz_t(), static_cast<unsigned long>(g));
  const Gaussian m = t * Gaussian(Rational(Eg));
  std::vector<Gaussian> roots;
  for (const Gaussian& beta : gaussian_integer_roots(m.re().num(), m.im().num(), g)) {
    roots.push_back(beta / Gaussian(Rational(E)));
  }
  std::sort(roots.begin(), roots.end(), canonical_less);
  return roots;
}

std::vector<BiEquivWitness> biequiv_witnesses(const Poly& p, const Poly& q) {
  const auto search = alpha_search(p, q);
  if (!search) return {};
  if (search->free) {
    BiEquivWitness w = witness_for(*search, Gaussian(1));
    if (verifies(p, q, w)) return {w};
    return {};
  }
  std::vector<BiEquivWitness> out;
  for (const Gaussian& alpha : search->alphas) {
    BiEquivWitness w = witness_for(*search, alpha);
    if (verifies(p, q, w)) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), witness_less);
  return out;
}

std::optional<BiEquivWitness> affine_biequiv(const Poly& p, const Poly& q) {
  auto all = biequiv_witnesses(p, q);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<AffineMap> affine_conjugate(const Poly& p, const Poly& q) {
  auto search = alpha_search(p, q);
  if (!search) return std::nullopt;
  if (search->free) {
    // The linear part of A ∘ B is α^{1-n}·K; it must equal 1.
    const BiEquivWitness base = witness_for(*search, Gaussian(1));
    const Gaussian K = base.A.a() * base.B.a();
    search->alphas = gaussian_roots(K, search->n - 1);
  }
  std::vector<AffineMap> found;
  for (const Gaussian& alpha : search->alphas) {
    const BiEquivWitness w = witness_for(*search, alpha);
    if (compose(w.A, w.B).is_identity() && verifies(p, q, w)) found.push_back(w.A);
  }
  if (found.empty()) return std::nullopt;
  std::sort(found.begin(), found.end(), [](const AffineMap& x, const AffineMap& y) {
    if (canonical_less(x.a(), y.a())) return true;
    if (canonical_less(y.a(), x.a())) return false;
    return canonical_less(x.b(), y.b());
  });
  return found.front();
}

bool is_monomial_like(const Poly& p) {
  if (p.degree() < 2) return false;
  const Poly hat = normal_form(p).hat;
  return hat == Poly::monomial(Gaussian(1), p.degree());
}

std::vector<BiEquivWitness> has_symmetries(const Poly& p) {
  if (p.degree() < 2) throw DomainError("symmetries are defined for degree at least 2");
  auto search = alpha_search(p, p);
  if (search->free) search->alphas = {Gaussian(-1), Gaussian::i(), -Gaussian::i()};
  std::vector<BiEquivWitness> out;
  for (const Gaussian& alpha : search->alphas) {
    if (alpha.is_one()) continue;
    BiEquivWitness w = witness_for(*search, alpha);
    if (verifies(p, p, w)) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), witness_less);
  return out;
}

Poly sandwich_compose(const SandwichSemigroup<Poly>& s, const Poly& f, const Poly& h) {
  return poly_compose(poly_compose(f, s.g), h);
}

RatFun sandwich_compose(const SandwichSemigroup<RatFun>& s, const RatFun& f, const RatFun& h) {
  return f.compose(s.g).compose(h);
}

SandwichIsomorphism::SandwichIsomorphism(AffineMap f, AffineMap B, Poly P1)
    : f_(std::move(f)), B_(std::move(B)), p1_(std::move(P1)) {
  p2_ = compose(B_, compose(f_, compose(p1_, f_.inverse())));
}

Poly SandwichIsomorphism::operator()(const Poly& P) const {
  return compose(compose(f_, P), compose(f_.inverse(), B_.inverse()));
}

void SandwichIsomorphism::verify_law(const std::vector<std::pair<Poly, Poly>>& samples) const {
  const SandwichSemigroup<Poly> source{p1_};
  const SandwichSemigroup<Poly> target{p2_};
  for (const auto& [P, Q] : samples) {
    const Poly lhs = (*this)(sandwich_compose(source, P, Q));
    const Poly rhs = sandwich_compose(target, (*this)(P), (*this)(Q));
    if (lhs != rhs) {
      throw DomainError("sandwich homomorphism law fails for P = " + to_expression(P) + ", Q = " + to_expression(Q));
    }
  }
}

}  // namespace rittforge
