#include "rittforge/decompose.hpp"

#include <algorithm>

#include "rittforge/errors.hpp"

namespace rittforge {

namespace {

// First `count` coefficients of f^(1/s) for a power series f with f(0) = 1,
// from the identity f·g' = (1/s)·f'·g, i.e.
// m·g_m = Σ_{j=1..m} ((1/s + 1)·j − m)·f_j·g_{m−j}.
std::vector<Gaussian> series_root(const std::vector<Gaussian>& f, int s, int count) {
  std::vector<Gaussian> g(static_cast<std::size_t>(count));
  g[0] = Gaussian(1);
  const Rational alpha_plus_one = Rational(1, s) + Rational(1);
  for (int m = 1; m < count; ++m) {
    Gaussian acc;
    for (int j = 1; j <= m && j < static_cast<int>(f.size()); ++j) {
      const Rational weight = alpha_plus_one * Rational(j) - Rational(m);
      acc += Gaussian(weight) * f[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(m - j)];
    }
    g[static_cast<std::size_t>(m)] = acc / Gaussian(Rational(m));
  }
  return g;
}

std::vector<int> proper_divisors(int n) {
  std::vector<int> out;
  for (int r = 2; r < n; ++r) {
    if (n % r == 0) out.push_back(r);
  }
  return out;
}

Poly compose_all(const std::vector<Poly>& factors) {
  Poly acc = Poly::variable();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = poly_compose(*it, acc);
  return acc;
}

void check_position(const Decomposition& d, int j) {
  if (j < 1 || j >= static_cast<int>(d.length())) {
    throw DomainError("move position " + std::to_string(j) + " out of range for a decomposition of length " +
                      std::to_string(d.length()));
  }
}

}  // namespace

std::optional<Split> decompose_once(const Poly& p, int r) {
  const int n = p.degree();
  if (n < 2) throw DomainError("decompose_once needs degree at least 2");
  if (r < 2 || r >= n || n % r != 0) {
    throw DomainError("right-factor degree " + std::to_string(r) + " is not a proper divisor of " + std::to_string(n));
  }
  const int s = n / r;
  const Gaussian lead = p.leading();
  const Poly monic = p.monic();

  // Reversed monic p is a series starting at 1; its s-th root, truncated to r
  // terms, gives the top coefficients of the only possible monic h.
  std::vector<Gaussian> reversed(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) reversed[static_cast<std::size_t>(k)] = monic.coeff(n - k);
  const std::vector<Gaussian> top = series_root(reversed, s, r);
  std::vector<Gaussian> h_coeffs(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k < r; ++k) h_coeffs[static_cast<std::size_t>(r - k)] = top[static_cast<std::size_t>(k)];
  Poly h(std::move(h_coeffs));

  std::vector<Gaussian> q_coeffs;
  q_coeffs.reserve(static_cast<std::size_t>(s) + 1);
  Poly rest = monic;
  while (!rest.is_zero()) {
    auto [quotient, remainder] = rest.divmod(h);
    if (remainder.degree() > 0) return std::nullopt;
    q_coeffs.push_back(remainder.coeff(0) * lead);
    rest = std::move(quotient);
  }
  return Split{Poly(std::move(q_coeffs)), std::move(h)};
}

bool is_indecomposable(const Poly& p) {
  if (p.degree() < 2) return false;
  for (int r : proper_divisors(p.degree())) {
    if (decompose_once(p, r)) return false;
  }
  return true;
}

Decomposition Decomposition::from_factors(std::vector<Poly> factors) {
  if (factors.empty()) throw DomainError("a decomposition needs at least one factor");
  for (const Poly& f : factors) {
    if (f.degree() < 2) throw DomainError("factor of degree below 2: " + to_expression(f));
    if (!is_indecomposable(f)) throw DomainError("factor is decomposable: " + to_expression(f));
  }
  return trusted(std::move(factors));
}

Decomposition Decomposition::trusted(std::vector<Poly> factors) {
  Decomposition d;
  d.factors_ = std::move(factors);
  return d;
}

Poly Decomposition::compose() const { return compose_all(factors_); }

Decomposition complete_decomposition(const Poly& p) {
  if (p.degree() <= 1) throw DomainError("polynomials of degree at most 1 have no prime decomposition");
  std::vector<Poly> right_factors;
  Poly current = p;
  while (true) {
    std::optional<Split> split;
    for (int r : proper_divisors(current.degree())) {
      split = decompose_once(current, r);
      if (split) break;
    }
    if (!split) break;
    // The smallest-degree right factor is necessarily prime.
    right_factors.push_back(std::move(split->h));
    current = std::move(split->q);
  }
  std::vector<Poly> factors{std::move(current)};
  factors.insert(factors.end(), std::make_move_iterator(right_factors.rbegin()),
                 std::make_move_iterator(right_factors.rend()));
  return Decomposition::trusted(std::move(factors));
}

RittInvariants ritt_invariants(const Decomposition& d) {
  RittInvariants inv;
  inv.length = d.length();
  for (const Poly& f : d.factors()) inv.degree_multiset.push_back(f.degree());
  std::sort(inv.degree_multiset.begin(), inv.degree_multiset.end());
  return inv;
}

int move_position(const RittMove& m) {
  return std::visit([](const auto& move) { return move.position; }, m);
}

bool is_pure_power(const Poly& p) {
  return p.degree() >= 2 && p.leading().is_one() && p.valuation() == p.degree();
}

std::optional<Poly> monomial_cofactor(const Poly& f, int k) {
  if (f.is_zero() || k < 1) return std::nullopt;
  const int r = f.valuation();
  std::vector<Gaussian> p_coeffs(static_cast<std::size_t>((f.degree() - r) / k) + 1);
  for (int e = r; e <= f.degree(); ++e) {
    const Gaussian& c = f.coeffs()[static_cast<std::size_t>(e)];
    if (c.is_zero()) continue;
    if ((e - r) % k != 0) return std::nullopt;
    p_coeffs[static_cast<std::size_t>((e - r) / k)] = c;
  }
  return Poly(std::move(p_coeffs));
}

std::vector<RittMove> available_moves(const Decomposition& d, int j) {
  check_position(d, j);
  const Poly& left = d.factors()[static_cast<std::size_t>(j - 1)];
  const Poly& right = d.factors()[static_cast<std::size_t>(j)];
  std::vector<RittMove> moves{AffineShuffle{j, AffineMap::identity()}};
  if (left == chebyshev(left.degree()) && right == chebyshev(right.degree())) moves.emplace_back(ChebyshevSwap{j});
  if (is_pure_power(left) && monomial_cofactor(right, left.degree())) {
    moves.emplace_back(MonomialSwap{j, left.degree(), right.valuation()});
  }
  return moves;
}

Decomposition apply_move(const Decomposition& d, const RittMove& m) {
  const int j = move_position(m);
  check_position(d, j);
  std::vector<Poly> factors = d.factors();
  Poly& left = factors[static_cast<std::size_t>(j - 1)];
  Poly& right = factors[static_cast<std::size_t>(j)];
  if (const auto* shuffle = std::get_if<AffineShuffle>(&m)) {
    left = compose(left, shuffle->A);
    right = compose(shuffle->A.inverse(), right);
  } else if (std::holds_alternative<ChebyshevSwap>(m)) {
    if (left != chebyshev(left.degree()) || right != chebyshev(right.degree())) {
      throw DomainError("Chebyshev swap needs two Chebyshev factors");
    }
    std::swap(left, right);
  } else {
    const auto& swap = std::get<MonomialSwap>(m);
    if (!is_pure_power(left) || left.degree() != swap.k) {
      throw DomainError("monomial swap needs f_j = z^" + std::to_string(swap.k));
    }
    const auto cofactor = monomial_cofactor(right, swap.k);
    if (!cofactor || right.valuation() != swap.r) {
      throw DomainError("monomial swap needs f_{j+1} = z^" + std::to_string(swap.r) + "·P(z^" +
                        std::to_string(swap.k) + ")");
    }
    Poly q = Poly::monomial(Gaussian(1), swap.r) * cofactor->pow(static_cast<unsigned>(swap.k));
    right = left;
    left = std::move(q);
  }
  return Decomposition::trusted(std::move(factors));
}

}  // namespace rittforge
