#include "rittforge/julia.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "rittforge/errors.hpp"

namespace rittforge {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

constexpr int kMaxResolution = 8192;

std::vector<std::complex<double>> to_complex_coeffs(const Poly& p) {
  std::vector<std::complex<double>> out;
  for (const Gaussian& c : p.coeffs()) out.push_back(c.to_complex());
  if (out.empty()) out.emplace_back(0.0);
  return out;
}

std::vector<std::complex<double>> derivative_coeffs(const std::vector<std::complex<double>>& c) {
  std::vector<std::complex<double>> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<double>(k));
  if (d.empty()) d.emplace_back(0.0);
  return d;
}

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double formula_radius(const std::vector<std::complex<double>>& c) {
  double sum = 1.0;
  for (const auto& x : c) sum += std::abs(x);
  return std::max(1.0, sum / std::abs(c.back()));
}

// Estimated distance from a to the Julia set of a polynomial, |z| ln|z| / |z'|
// at a large bailout. Infinite when the orbit does not reach the bailout.
double exterior_distance(const FloatMap& R, std::complex<double> a, int max_iter) {
  constexpr double bailout = 1e8;
  std::complex<double> z = a;
  std::complex<double> dz = 1.0;
  for (int n = 0; n < max_iter && std::abs(z) < bailout; ++n) {
    dz = R.derivative(z) * dz;
    z = R(z);
  }
  const double r = std::abs(z);
  if (!(r >= bailout) || !std::isfinite(r)) return std::numeric_limits<double>::infinity();
  return r * std::log(r) / std::abs(dz);
}

}  // namespace

std::string describe(const OrbitReport& r) {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const FiniteExact& f) { out << "FiniteExact(preperiod " << f.preperiod << ", period " << f.period << ")"; },
                 [&](const InfiniteCertified& f) { out << "InfiniteCertified(escape at " << f.escape_iterate << ")"; },
                 [&](const AttractedNumeric& f) {
                   out << "AttractedNumeric(period " << f.period << ", |multiplier| " << f.multiplier_modulus << ")";
                 },
                 [&](const FiniteNumeric& f) {
                   out << "FiniteNumeric(preperiod " << f.preperiod << ", period " << f.period << ", |multiplier| "
                       << f.multiplier_modulus << ")";
                 },
                 [&](const EscapedNumeric& f) { out << "EscapedNumeric(escape at " << f.escape_iterate << ")"; },
                 [&](const Undecided& f) { out << "Undecided(after " << f.budget << ")"; }},
             r);
  return out.str();
}

Rational certified_escape_radius(const Poly& p) {
  if (p.degree() < 2) throw DomainError("escape radius needs a polynomial of degree at least 2");
  Rational sum = 1;
  for (const Gaussian& c : p.coeffs()) sum += c.re().abs() + c.im().abs();
  const Rational lead = std::max(p.leading().re().abs(), p.leading().im().abs());
  return std::max(Rational(1), sum / lead);
}

double escape_radius(const Poly& p) {
  if (p.degree() < 2) throw DomainError("escape radius needs a polynomial of degree at least 2");
  return formula_radius(to_complex_coeffs(p));
}

OrbitReport exact_orbit(const RatFun& R, const Gaussian& a, const ExactBudget& budget) {
  const bool polynomial = R.is_polynomial() && R.degree() >= 2;
  Rational radius_squared;
  if (polynomial) {
    const Rational rho = certified_escape_radius(R.num());
    radius_squared = rho * rho;
  }
  const std::optional<Gaussian> at_infinity = R.value_at_infinity();
  std::unordered_map<Gaussian, int, GaussianHash> seen;
  int infinity_seen = -1;
  std::optional<Gaussian> z = a;  // nullopt is the point at infinity
  for (int n = 0;; ++n) {
    if (z) {
      if (auto it = seen.find(*z); it != seen.end()) return FiniteExact{it->second, n - it->second};
      seen.emplace(*z, n);
      if (polynomial && z->norm() > radius_squared) return InfiniteCertified{n};
      if (z->bit_size() > budget.height_bound) return Undecided{n};
    } else {
      if (infinity_seen >= 0) return FiniteExact{infinity_seen, n - infinity_seen};
      infinity_seen = n;
    }
    if (n >= budget.max_iter) return Undecided{n};
    if (z) {
      z = R.eval(*z);
      if (!z && !at_infinity) return Undecided{n};
    } else {
      z = at_infinity;
    }
  }
}

FloatMap::FloatMap(const RatFun& R) : FloatMap(to_complex_coeffs(R.num()), to_complex_coeffs(R.den())) {}

FloatMap::FloatMap(std::vector<std::complex<double>> num, std::vector<std::complex<double>> den)
    : num_(std::move(num)), den_(std::move(den)) {
  while (den_.size() > 1 && den_.back() == 0.0) den_.pop_back();
  if (den_.size() == 1) {
    for (auto& c : num_) c /= den_[0];
    den_[0] = 1.0;
  }
  dnum_ = derivative_coeffs(num_);
  dden_ = derivative_coeffs(den_);
}

std::complex<double> FloatMap::operator()(std::complex<double> z) const {
  if (is_polynomial()) return horner(num_, z);
  return horner(num_, z) / horner(den_, z);
}

std::complex<double> FloatMap::derivative(std::complex<double> z) const {
  if (is_polynomial()) return horner(dnum_, z);
  const auto d = horner(den_, z);
  return (horner(dnum_, z) * d - horner(num_, z) * horner(dden_, z)) / (d * d);
}

OrbitReport float_orbit(const FloatMap& R, std::complex<double> a, const FloatBudget& budget) {
  if (!(budget.eps > 0)) throw DomainError("eps must be positive");
  double radius = budget.escape_radius;
  if (radius <= 0) radius = std::numeric_limits<double>::infinity();
  auto escaped = [&](std::complex<double> z) { return !(std::abs(z) <= radius); };
  if (escaped(a)) return EscapedNumeric{0};

  // Brent's cycle detection up to tolerance eps.
  std::complex<double> tortoise = a;
  std::complex<double> hare = R(a);
  int power = 1, lambda = 1, iter = 1;
  if (escaped(hare)) return EscapedNumeric{1};
  while (std::abs(tortoise - hare) > budget.eps) {
    if (iter >= budget.max_iter) return Undecided{iter};
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    hare = R(hare);
    ++lambda;
    ++iter;
    if (escaped(hare)) return EscapedNumeric{iter};
  }

  int period = lambda;
  for (int d = 1; d < lambda; ++d) {
    if (lambda % d != 0) continue;
    std::complex<double> w = hare;
    for (int k = 0; k < d; ++k) w = R(w);
    if (std::abs(w - hare) <= budget.eps) {
      period = d;
      break;
    }
  }
  std::complex<double> multiplier = 1.0;
  std::complex<double> w = hare;
  for (int k = 0; k < period; ++k) {
    multiplier *= R.derivative(w);
    w = R(w);
  }
  const double modulus = std::abs(multiplier);
  if (modulus < 1 - budget.eps) return AttractedNumeric{period, modulus};
  if (modulus > 1 + budget.eps) {
    std::complex<double> lead = a;
    for (int k = 0; k < period; ++k) lead = R(lead);
    std::complex<double> trail = a;
    for (int i = 0; i + period <= budget.max_iter; ++i) {
      if (std::abs(lead - trail) <= budget.eps) return FiniteNumeric{i, period, modulus};
      lead = R(lead);
      trail = R(trail);
    }
  }
  return Undecided{iter};
}

OrbitReport float_orbit(const RatFun& R, std::complex<double> a, const FloatBudget& budget) {
  FloatBudget b = budget;
  if (b.escape_radius <= 0 && R.is_polynomial() && R.degree() >= 2) b.escape_radius = escape_radius(R.num());
  return float_orbit(FloatMap(R), a, b);
}

std::string class_name(CellClass c) {
  switch (c) {
    case CellClass::Finite:
      return "FINITE";
    case CellClass::Undecided:
      return "UNDECIDED";
    case CellClass::Attracted:
      return "ATTRACTED";
    case CellClass::Escape:
      return "ESCAPE";
  }
  return "UNDECIDED";
}

CellClass classify(const OrbitReport& r) {
  return std::visit(Overloaded{[](const FiniteExact&) { return CellClass::Finite; },
                               [](const InfiniteCertified&) { return CellClass::Escape; },
                               [](const AttractedNumeric&) { return CellClass::Attracted; },
                               [](const FiniteNumeric&) { return CellClass::Finite; },
                               [](const EscapedNumeric&) { return CellClass::Escape; },
                               [](const Undecided&) { return CellClass::Undecided; }},
                    r);
}

Gaussian GridClassification::cell_center(int i, int j) const {
  const Rational x = region.center.re() - region.width / Rational(2) +
                     (Rational(2 * i + 1, 2)) * region.width / Rational(nx);
  const Rational y = region.center.im() + region.height / Rational(2) -
                     (Rational(2 * j + 1, 2)) * region.height / Rational(ny);
  return {x, y};
}

GridClassification render(const RatFun& R, const Region& region, const RenderOptions& options) {
  if (options.nx < 1 || options.ny < 1) throw DomainError("resolution must be positive");
  if (options.nx > kMaxResolution || options.ny > kMaxResolution) {
    throw BudgetError("resolution exceeds 8192 x 8192");
  }
  if (region.width.sign() <= 0 || region.height.sign() <= 0) throw DomainError("region must have positive size");
  GridClassification grid{region, options.nx, options.ny, {}, {}, {}};
  const std::size_t count = static_cast<std::size_t>(options.nx) * static_cast<std::size_t>(options.ny);
  grid.cells.assign(count, CellClass::Undecided);
  grid.period.assign(count, 0);
  grid.preperiod.assign(count, 0);

  const FloatMap map(R);
  const bool polynomial = R.is_polynomial() && R.degree() >= 2;
  FloatBudget fb{options.max_iter, options.eps, options.escape_radius};
  if (fb.escape_radius <= 0 && polynomial) fb.escape_radius = escape_radius(R.num());
  const ExactBudget eb{options.max_iter, options.height_bound};
  const double cell = std::min(region.width.to_double() / options.nx, region.height.to_double() / options.ny);
  const double x0 = region.center.re().to_double() - region.width.to_double() / 2;
  const double y0 = region.center.im().to_double() + region.height.to_double() / 2;
  const double dx = region.width.to_double() / options.nx;
  const double dy = region.height.to_double() / options.ny;

  auto classify_cell = [&](int i, int j) {
    const std::size_t idx = static_cast<std::size_t>(j) * static_cast<std::size_t>(options.nx) + static_cast<std::size_t>(i);
    std::optional<OrbitReport> report;
    if (options.exact) {
      OrbitReport exact = exact_orbit(R, grid.cell_center(i, j), eb);
      if (!std::holds_alternative<Undecided>(exact)) report = exact;
    }
    const std::complex<double> a(x0 + (i + 0.5) * dx, y0 - (j + 0.5) * dy);
    if (!report) report = float_orbit(map, a, fb);
    CellClass c = classify(*report);
    if (const auto* f = std::get_if<FiniteExact>(&*report)) {
      grid.period[idx] = f->period;
      grid.preperiod[idx] = f->preperiod;
    } else if (const auto* f = std::get_if<FiniteNumeric>(&*report)) {
      grid.period[idx] = f->period;
      grid.preperiod[idx] = f->preperiod;
    } else if (const auto* f = std::get_if<AttractedNumeric>(&*report)) {
      grid.period[idx] = f->period;
    }
    // The estimate is within a factor 2 of the true distance, so a refined
    // cell lies within two cells of the Julia set. Exact certificates stand.
    if (std::holds_alternative<EscapedNumeric>(*report) && polynomial && options.boundary_refinement &&
        exterior_distance(map, a, options.max_iter) < cell) {
      c = CellClass::Undecided;
    }
    grid.cells[idx] = c;
  };

  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(options.ny));
  std::atomic<int> next_row{0};
  auto worker = [&] {
    for (int j = next_row++; j < options.ny; j = next_row++) {
      for (int i = 0; i < options.nx; ++i) classify_cell(i, j);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return grid;
}

void write_pgm(std::ostream& out, const GridClassification& g, bool binary) {
  out << (binary ? "P5" : "P2") << "\n" << g.nx << " " << g.ny << "\n255\n";
  if (binary) {
    for (CellClass c : g.cells) out.put(static_cast<char>(static_cast<std::uint8_t>(c)));
    return;
  }
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      out << (i ? " " : "") << static_cast<int>(g.cells[static_cast<std::size_t>(j) * g.nx + i]);
    }
    out << "\n";
  }
}

void write_csv(std::ostream& out, const GridClassification& g) {
  out << "re,im,class,period,preperiod\n";
  out << std::setprecision(17);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t idx = static_cast<std::size_t>(j) * g.nx + i;
      const auto z = g.cell_center(i, j).to_complex();
      out << z.real() << "," << z.imag() << "," << class_name(g.cells[idx]) << "," << g.period[idx] << ","
          << g.preperiod[idx] << "\n";
    }
  }
}

}  // namespace rittforge
