#include "rittforge/poly.hpp"

#include <cctype>
#include <sstream>

#include "rittforge/errors.hpp"

namespace rittforge {

Poly make_poly(std::initializer_list<Gaussian> ascending) {
  return Poly(std::vector<Gaussian>(ascending));
}

Poly poly_compose(const Poly& p, const Poly& q) {
#ifdef RITTFORGE_INJECT_COMPOSE_MUTATION
  // Mutation smoke test: an off-by-one in the constant term.
  if (p.degree() >= 2) return p.compose(q) + Poly::constant(Gaussian(1));
#endif
  return p.compose(q);
}

Gaussian poly_eval(const Poly& p, const Gaussian& x) { return p(x); }

std::complex<double> eval_complex(const Poly& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

Poly chebyshev(int n) {
  if (n < 0) throw DomainError("chebyshev: negative index");
  Poly prev = Poly::constant(Gaussian(1));
  if (n == 0) return prev;
  Poly cur = Poly::variable();
  const Poly two_z = Poly::monomial(Gaussian(2), 1);
  for (int k = 1; k < n; ++k) {
    Poly next = two_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

// Recursive-descent parser over: expr := term (('+'|'-') term)*,
// term := power (('*'|'/')? power)*, power := ('-'|'+') power | atom ('^' integer)?,
// atom := number | 'z' | 'i' | '(' expr ')'.
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("map expression: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expression() {
    Poly acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Poly rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'z' || c == 'i' || c == '(';
  }

  Poly term() {
    Poly acc = power();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        Poly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(d.leading().inverse());
      } else if (starts_factor(c)) {
        acc = acc * power();  // implicit multiplication, e.g. "2z" or "(1/2)z"
      } else {
        return acc;
      }
    }
  }

  Poly power() {
    const char sign = peek();
    if (sign == '-' || sign == '+') {
      ++pos_;
      Poly rest = power();
      return sign == '-' ? -rest : rest;
    }
    Poly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Poly atom() {
    const char c = peek();
    if (c == 'z') {
      ++pos_;
      return Poly::variable();
    }
    if (c == 'i') {
      ++pos_;
      return Poly::constant(Gaussian::i());
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size()) {
        const char d = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(d)) || d == '.') {
          ++pos_;
        } else if ((d == 'e' || d == 'E') && pos_ + 1 < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '-' ||
                    text_[pos_ + 1] == '+')) {
          pos_ += 2;
        } else {
          break;
        }
      }
      return Poly::constant(Gaussian(Rational::parse(text_.substr(start, pos_ - start))));
    }
    fail("expected a number, 'z', 'i' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string coefficient_text(const Gaussian& c) {
  auto rational_text = [](const Rational& r) {
    return r.is_integer() ? r.num().get_str() : r.to_string();
  };
  if (c.is_real()) return rational_text(c.re());
  if (c.re().is_zero()) {
    if (c.im() == Rational(1)) return "i";
    if (c.im() == Rational(-1)) return "-i";
    return rational_text(c.im()) + "i";
  }
  return "(" + rational_text(c.re()) + (c.im().sign() > 0 ? "+" : "-") + rational_text(c.im().abs()) + "i)";
}

}  // namespace

Poly parse_poly_expression(std::string_view text) { return ExpressionParser(text).parse(); }

std::string to_expression(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Gaussian c = p.coeff(k);
    if (c.is_zero()) continue;
    bool negative = c.is_real() && c.re().sign() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c.is_one();
    if (k == 0 || !unit) out << coefficient_text(c);
    if (k >= 1) out << "z";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

}  // namespace rittforge
