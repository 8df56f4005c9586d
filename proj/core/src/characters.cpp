#include "rittforge/characters.hpp"

#include "rittforge/decompose.hpp"
#include "rittforge/equivalence.hpp"
#include "rittforge/errors.hpp"

namespace rittforge {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// n with base^n = value, or -1.
int exact_log(int value, int base) {
  int n = 0;
  long power = 1;
  while (power < value) {
    power *= base;
    ++n;
  }
  return power == value ? n : -1;
}

const CharValue* lookup(const PrimeTable& t, const Poly& p) {
  for (const auto& [key, value] : t.table) {
    if (key == p) return &value;
  }
  return nullptr;
}

CharValue orbit_value(const AffineOrbitChar& chi, const Poly& p) {
  const int d = chi.P.degree();
  if (d < 2) throw DomainError("orbit character needs a prime of degree at least 2");
  const int n = exact_log(p.degree(), d);
  if (n < 1) return CharValue::zero();
  if (n == 1) return affine_biequiv(chi.P, p) ? CharValue::power(chi.a, 1) : CharValue::zero();
  const Decomposition decomposition = complete_decomposition(p);
  for (const Poly& f : decomposition.factors()) {
    if (f.degree() != d || !affine_biequiv(chi.P, f)) return CharValue::zero();
  }
  return CharValue::power(chi.a, n);
}

}  // namespace

std::string base_to_string(const CharBase& b) {
  return std::visit(Overloaded{[](const std::string& s) { return s; },
                               [](const Gaussian& g) { return g.to_string(); }},
                    b);
}

bool CharValue::is_zero() const { return std::holds_alternative<Zero>(canonical().value_); }

CharValue CharValue::canonical() const {
  return std::visit(
      Overloaded{[](const Zero&) { return CharValue::zero(); },
                 [](const Exact& e) { return e.value.is_zero() ? CharValue::zero() : CharValue(e); },
                 [this](const PowerOfBase& p) {
                   if (p.exponent == 0) return CharValue::exact(Gaussian(1));
                   if (const auto* g = std::get_if<Gaussian>(&p.base)) {
                     if (g->is_zero()) {
                       if (p.exponent < 0) throw DomainError("zero base with a negative exponent");
                       return CharValue::zero();
                     }
                     return CharValue::exact(g->pow(p.exponent));
                   }
                   return *this;
                 }},
      value_);
}

CharValue operator*(const CharValue& a, const CharValue& b) {
  const auto* pa = std::get_if<CharValue::PowerOfBase>(&a.value_);
  const auto* pb = std::get_if<CharValue::PowerOfBase>(&b.value_);
  const CharValue ca = a.canonical();
  const CharValue cb = b.canonical();
  if (std::holds_alternative<CharValue::Zero>(ca.value_) || std::holds_alternative<CharValue::Zero>(cb.value_)) {
    return CharValue::zero();
  }
  if (pa && pb && pa->base == pb->base) return CharValue::power(pa->base, pa->exponent + pb->exponent);
  const CharValue one = CharValue::exact(Gaussian(1));
  if (ca.value_ == one.value_) return b;
  if (cb.value_ == one.value_) return a;
  const auto* ea = std::get_if<CharValue::Exact>(&ca.value_);
  const auto* eb = std::get_if<CharValue::Exact>(&cb.value_);
  if (ea && eb) return CharValue::exact(ea->value * eb->value);
  throw DomainError("cannot multiply character values " + a.to_string() + " and " + b.to_string());
}

bool operator==(const CharValue& a, const CharValue& b) { return a.canonical().value_ == b.canonical().value_; }

std::string CharValue::to_string() const {
  return std::visit(Overloaded{[](const Zero&) { return std::string("0"); },
                               [](const Exact& e) { return e.value.to_string(); },
                               [](const PowerOfBase& p) {
                                 return "(" + base_to_string(p.base) + ")^" + std::to_string(p.exponent);
                               }},
                    value_);
}

CharValue evaluate(const Character& chi, const Poly& p) {
  if (p.degree() <= 0) return CharValue::zero();
  const bool affine = p.degree() == 1;
  return std::visit(
      Overloaded{
          [&](const DegreeChar& c) {
            if (affine) return CharValue::exact(Gaussian(1));
            return CharValue::exact(Gaussian(Rational(p.degree()).pow(c.s)));
          },
          [&](const LengthChar& c) {
            if (affine) return CharValue::power(c.base, 0);
            return CharValue::power(c.base, static_cast<long>(complete_decomposition(p).length()));
          },
          [&](const AffineOrbitChar& c) {
            if (affine) return CharValue::power(c.a, 0);
            return orbit_value(c, p);
          },
          [&](const PrimeTable& t) {
            CharValue acc = CharValue::exact(Gaussian(1));
            if (affine) return acc;
            const Decomposition d = complete_decomposition(p);
            for (const Poly& f : d.factors()) {
              const CharValue* v = lookup(t, f);
              acc = acc * (v ? *v : CharValue::zero());
            }
            return acc;
          }},
      chi);
}

std::vector<MultiplicativityViolation> verify_multiplicative(const Character& chi,
                                                             const std::vector<std::pair<Poly, Poly>>& samples) {
  std::vector<MultiplicativityViolation> out;
  for (const auto& [p, q] : samples) {
    CharValue composed = evaluate(chi, poly_compose(p, q));
    CharValue product = evaluate(chi, p) * evaluate(chi, q);
    if (!(composed == product)) out.push_back({p, q, std::move(composed), std::move(product)});
  }
  return out;
}

PrimeDataReport check_prime_data(const PrimeTable& table, const std::vector<PrimeQuadruple>& quadruples) {
  PrimeDataReport report;
  auto value = [&](const Poly& f) {
    const CharValue* v = lookup(table, f);
    return v ? *v : CharValue::zero();
  };
  for (std::size_t k = 0; k < quadruples.size(); ++k) {
    const auto& [P1, P2, P3, P4] = quadruples[k];
    if (poly_compose(P1, P2) != poly_compose(P3, P4)) {
      throw DomainError("quadruple " + std::to_string(k) + " does not satisfy P1∘P2 = P3∘P4");
    }
    if (!(value(P1) * value(P2) == value(P3) * value(P4))) report.violating_quadruples.push_back(k);
  }
  for (const auto& [key, v] : table.table) {
    if (key.degree() <= 0 && !v.is_zero()) report.nonzero_constants.push_back(key);
  }
  return report;
}

}  // namespace rittforge
