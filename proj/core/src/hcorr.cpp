#include "rittforge/hcorr.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "rittforge/errors.hpp"

namespace rittforge {

namespace {

// f·L with L the common denominator, as a table c[i][j] of the coefficient
// of z^i W^j.
std::vector<std::vector<Gaussian>> cleared_table(const BiPoly& f) {
  const Poly L = common_denominator(f);
  std::vector<std::vector<Gaussian>> table;
  for (int j = 0; j <= f.degree(); ++j) {
    const RatFun& c = f.coeffs()[static_cast<std::size_t>(j)];
    const Poly scaled = c.num() * L.exact_div(c.den());
    for (int i = 0; i <= scaled.degree(); ++i) {
      if (table.size() <= static_cast<std::size_t>(i)) {
        table.resize(static_cast<std::size_t>(i) + 1, std::vector<Gaussian>(static_cast<std::size_t>(f.degree()) + 1));
      }
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = scaled.coeff(i);
    }
  }
  return table;
}

}  // namespace

HolCorr::HolCorr(BiPoly poly, bool squarefree) : squarefree_(squarefree) {
  if (poly.degree() < 1) throw DomainError("a correspondence needs positive degree in W");
  poly_ = poly.leading() == RatFun(1) ? std::move(poly) : poly.monic();
}

HolCorr from_branches(const std::vector<RatFun>& branches) {
  if (branches.empty()) throw DomainError("from_branches needs at least one branch");
  BiPoly acc = BiPoly::constant(RatFun(1));
  for (const RatFun& r : branches) acc = acc * BiPoly(std::vector<RatFun>{-r, RatFun(1)});
  return HolCorr(std::move(acc));
}

HolCorr graph(const RatFun& r) { return from_branches({r}); }

BiPoly squarefree_part(const BiPoly& f) {
  if (f.degree() < 1) return f.monic();
  return f.exact_div(BiPoly::gcd(f, f.derivative())).monic();
}

HolCorr compose(const HolCorr& k2, const HolCorr& k1, bool squarefree) {
  // k2(w, U)·L(w) as a polynomial in W = w whose coefficients are
  // polynomials in U with constant coefficients.
  const auto table = cleared_table(k2.poly());
  std::vector<BiPoly> in_w;
  for (const auto& row : table) {
    std::vector<RatFun> in_u(row.begin(), row.end());
    in_w.emplace_back(std::move(in_u));
  }
  const BiPoly res = monic_resultant_in_W(lift(k1.poly()), WUPoly(std::move(in_w)));
  if (res.is_zero()) throw DomainError("resultant vanishes identically: the correspondences share a component");
  if (res.degree() < 1) throw DomainError("composition has no points over a generic z");
  return HolCorr(squarefree ? squarefree_part(res) : res, squarefree);
}

std::optional<HolCorr> inverse(const HolCorr& k) {
  const auto table = cleared_table(k.poly());
  if (table.size() < 2) return std::nullopt;
  // Coefficient of the new W^i is Σ_j c[i][j] z^j.
  std::vector<RatFun> swapped;
  swapped.reserve(table.size());
  for (const auto& row : table) swapped.emplace_back(Poly(row));
  BiPoly f(std::move(swapped));
  if (f.degree() < 1) return std::nullopt;
  return HolCorr(std::move(f), k.squarefree());
}

std::vector<std::complex<double>> fiber(const HolCorr& k, std::complex<double> z0) {
  const int d = k.degree();
  std::vector<std::complex<double>> c(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const RatFun& coeff = k.poly().coeffs()[static_cast<std::size_t>(j)];
    const std::complex<double> den = eval_complex(coeff.den(), z0);
    if (std::abs(den) < 1e-12) throw DomainError("z0 is a pole of a coefficient");
    c[static_cast<std::size_t>(j)] = eval_complex(coeff.num(), z0) / den;
  }
  std::vector<std::complex<double>> roots;
  if (d == 1) {
    roots.push_back(-c[0]);
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[static_cast<std::size_t>(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw DomainError("eigenvalue iteration did not converge");
    for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

}  // namespace rittforge
