#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rittforge/ratfun.hpp"

namespace rittforge {

/// The orbit revisits an earlier point exactly: z_{preperiod+period} = z_{preperiod}.
struct FiniteExact {
  int preperiod = 0;
  int period = 0;
  friend bool operator==(const FiniteExact&, const FiniteExact&) = default;
};
/// |z_n| exceeded a certified escape radius at n = escape_iterate.
struct InfiniteCertified {
  int escape_iterate = 0;
  friend bool operator==(const InfiniteCertified&, const InfiniteCertified&) = default;
};
/// Floating orbit converging to an attracting cycle.
struct AttractedNumeric {
  int period = 0;
  double multiplier_modulus = 0;
};
/// Floating orbit shadowing a repelling cycle: evidence of exact preperiodicity.
struct FiniteNumeric {
  int preperiod = 0;
  int period = 0;
  double multiplier_modulus = 0;
};
/// Floating orbit exceeded the escape radius at n = escape_iterate.
struct EscapedNumeric {
  int escape_iterate = 0;
};
/// Budget exhausted after `budget` iterations without a decision.
struct Undecided {
  int budget = 0;
};
using OrbitReport =
    std::variant<FiniteExact, InfiniteCertified, AttractedNumeric, FiniteNumeric, EscapedNumeric, Undecided>;

std::string describe(const OrbitReport& r);

struct ExactBudget {
  int max_iter = 1000;
  std::size_t height_bound = 4096;  ///< bits per coordinate numerator/denominator
};

/// A rational bound ρ ≥ max(1, (1 + Σ|c_k|)/|c_d|) for a polynomial of degree
/// d ≥ 2, so |z| > ρ implies |R(z)| > |z| and the orbit diverges.
Rational certified_escape_radius(const Poly& p);
/// max(1, (1 + Σ|c_k|)/|c_d|) in floating point.
double escape_radius(const Poly& p);

/// Exact forward orbit of a under R over Q(i). Points where R has a pole
/// continue at infinity when R(∞) is finite and are Undecided otherwise.
OrbitReport exact_orbit(const RatFun& R, const Gaussian& a, const ExactBudget& budget = {});

/// R with complex double coefficients, for fast iteration.
class FloatMap {
 public:
  explicit FloatMap(const RatFun& R);
  FloatMap(std::vector<std::complex<double>> num, std::vector<std::complex<double>> den);

  std::complex<double> operator()(std::complex<double> z) const;
  std::complex<double> derivative(std::complex<double> z) const;
  bool is_polynomial() const { return den_.size() == 1; }

 private:
  std::vector<std::complex<double>> num_, den_, dnum_, dden_;
};

struct FloatBudget {
  int max_iter = 1000;
  double eps = 1e-9;
  double escape_radius = 0;  ///< 0 selects the formula radius of the map (polynomials only)
};

/// Floating orbit classification: escape, attracting cycle, shadowed
/// repelling cycle, or undecided.
OrbitReport float_orbit(const FloatMap& R, std::complex<double> a, const FloatBudget& budget);
OrbitReport float_orbit(const RatFun& R, std::complex<double> a, const FloatBudget& budget = {});

enum class CellClass : std::uint8_t { Finite = 0, Undecided = 85, Attracted = 170, Escape = 255 };

std::string class_name(CellClass c);
CellClass classify(const OrbitReport& r);

/// Axis-aligned rectangle given exactly.
struct Region {
  Gaussian center;
  Rational width = 4;
  Rational height = 4;
};

struct RenderOptions {
  int nx = 512;
  int ny = 512;
  int max_iter = 1000;
  double eps = 1e-9;
  std::size_t height_bound = 4096;
  double escape_radius = 0;  ///< 0 selects the formula radius
  /// Classify exact cell centers with exact_orbit first.
  bool exact = false;
  /// Numerically escaping cells whose estimated distance to the Julia set is
  /// below one cell become UNDECIDED (polynomial maps only).
  bool boundary_refinement = true;
  /// 0 uses the hardware concurrency.
  unsigned threads = 0;
};

struct GridClassification {
  Region region;
  int nx = 0;
  int ny = 0;
  std::vector<CellClass> cells;  ///< row-major, row 0 at the top
  std::vector<int> period;       ///< 0 when unknown
  std::vector<int> preperiod;    ///< 0 when unknown

  /// Exact center of cell (i, j), i the column.
  Gaussian cell_center(int i, int j) const;
};

/// Throws BudgetError when the resolution exceeds 8192 × 8192.
GridClassification render(const RatFun& R, const Region& region, const RenderOptions& options);

void write_pgm(std::ostream& out, const GridClassification& g, bool binary = true);
void write_csv(std::ostream& out, const GridClassification& g);

}  // namespace rittforge
