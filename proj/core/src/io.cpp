#include "rittforge/io.hpp"

#include "rittforge/errors.hpp"

namespace rittforge::io {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected a JSON object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing member \"") + key + "\"");
  return *it;
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

json to_json(const Gaussian& g) { return g.to_string(); }

Gaussian gaussian_from_json(const json& j) {
  if (j.is_string()) return Gaussian::parse(j.get<std::string>());
  if (j.is_number_integer()) return Gaussian(Rational(j.get<long>()));
  throw ParseError("a coefficient must be a string such as \"1/2\" or \"1/2+3/4 i\"");
}

json to_json(const Poly& p) {
  json coeffs = json::array();
  for (const Gaussian& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"coeffs", coeffs}};
}

Poly poly_from_json(const json& j) {
  if (j.is_object() && j.contains("expr")) {
    const json& e = j["expr"];
    if (!e.is_string()) throw ParseError("\"expr\" must be a string");
    return parse_poly_expression(e.get<std::string>());
  }
  const json& coeffs = member(j, "coeffs");
  if (!coeffs.is_array()) throw ParseError("\"coeffs\" must be an array");
  std::vector<Gaussian> out;
  out.reserve(coeffs.size());
  for (const json& c : coeffs) out.push_back(gaussian_from_json(c));
  return Poly(std::move(out));
}

json to_json(const RatFun& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

RatFun ratfun_from_json(const json& j) {
  if (j.is_object() && j.contains("num")) {
    Poly den = poly_from_json(member(j, "den"));
    if (den.is_zero()) throw ParseError("zero denominator");
    return RatFun(poly_from_json(j["num"]), std::move(den));
  }
  return RatFun(poly_from_json(j));
}

json to_json(const AffineMap& f) { return {{"a", to_json(f.a())}, {"b", to_json(f.b())}}; }

AffineMap affine_from_json(const json& j) {
  Gaussian a = gaussian_from_json(member(j, "a"));
  if (a.is_zero()) throw ParseError("affine map with a = 0");
  return {std::move(a), gaussian_from_json(member(j, "b"))};
}

json to_json(const RittInvariants& inv) { return {{"length", inv.length}, {"degrees", inv.degree_multiset}}; }

json to_json(const Decomposition& d) {
  json factors = json::array();
  for (const Poly& f : d.factors()) factors.push_back(to_json(f));
  return {{"factors", factors}, {"invariants", to_json(ritt_invariants(d))}};
}

Decomposition decomposition_from_json(const json& j) {
  const json& factors = member(j, "factors");
  if (!factors.is_array()) throw ParseError("\"factors\" must be an array");
  std::vector<Poly> out;
  for (const json& f : factors) out.push_back(poly_from_json(f));
  return Decomposition::from_factors(std::move(out));
}

json to_json(const RittMove& m) {
  return std::visit(
      [](const auto& move) -> json {
        using T = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<T, AffineShuffle>) {
          return {{"type", "affine_shuffle"}, {"position", move.position}, {"A", to_json(move.A)}};
        } else if constexpr (std::is_same_v<T, ChebyshevSwap>) {
          return {{"type", "chebyshev_swap"}, {"position", move.position}};
        } else {
          return {{"type", "monomial_swap"}, {"position", move.position}, {"k", move.k}, {"r", move.r}};
        }
      },
      m);
}

RittMove move_from_json(const json& j) {
  const json& type = member(j, "type");
  if (!type.is_string()) throw ParseError("\"type\" must be a string");
  const int position = integer(member(j, "position"), "position");
  const std::string t = type.get<std::string>();
  if (t == "affine_shuffle") return AffineShuffle{position, affine_from_json(member(j, "A"))};
  if (t == "chebyshev_swap") return ChebyshevSwap{position};
  if (t == "monomial_swap") {
    return MonomialSwap{position, integer(member(j, "k"), "k"), integer(member(j, "r"), "r")};
  }
  throw ParseError("unknown move type \"" + t + "\"");
}

json to_json(const CharValue& v) {
  return std::visit(
      [](const auto& value) -> json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, CharValue::Zero>) {
          return "0";
        } else if constexpr (std::is_same_v<T, CharValue::Exact>) {
          return to_json(value.value);
        } else {
          return {{"base", base_to_string(value.base)}, {"exp", value.exponent}};
        }
      },
      v.get());
}

CharValue charvalue_from_json(const json& j) {
  if (j.is_string()) {
    const Gaussian g = gaussian_from_json(j);
    return g.is_zero() ? CharValue::zero() : CharValue::exact(g);
  }
  const json& base = member(j, "base");
  if (!base.is_string()) throw ParseError("\"base\" must be a string");
  const long exponent = integer(member(j, "exp"), "exp");
  const std::string b = base.get<std::string>();
  try {
    return CharValue::power(Gaussian::parse(b), exponent);
  } catch (const ParseError&) {
    return CharValue::power(b, exponent);
  }
}

json to_json(const BiEquivWitness& w) { return {{"A", to_json(w.A)}, {"B", to_json(w.B)}}; }

BiEquivWitness witness_from_json(const json& j) {
  return {affine_from_json(member(j, "A")), affine_from_json(member(j, "B"))};
}

json to_json(const HolCorr& k) {
  json coeffs = json::array();
  for (const RatFun& c : k.poly().coeffs()) coeffs.push_back(to_json(c));
  json out = {{"coeffs_in_W", coeffs}};
  if (k.squarefree()) out["squarefree"] = true;
  return out;
}

HolCorr hcorr_from_json(const json& j) {
  const json& coeffs = member(j, "coeffs_in_W");
  if (!coeffs.is_array()) throw ParseError("\"coeffs_in_W\" must be an array");
  std::vector<RatFun> out;
  for (const json& c : coeffs) out.push_back(ratfun_from_json(c));
  BiPoly poly(std::move(out));
  if (poly.degree() < 1) throw ParseError("a correspondence needs positive degree in W");
  const bool squarefree = j.contains("squarefree") && j["squarefree"].is_boolean() && j["squarefree"].get<bool>();
  return HolCorr(std::move(poly), squarefree);
}

json to_json(const FiniteCorr& k) {
  json rows = json::array();
  for (int x = 0; x < k.size(); ++x) {
    json row = json::array();
    for (int y = 0; y < k.size(); ++y) row.push_back((k.row(x) >> y) & 1U);
    rows.push_back(row);
  }
  return rows;
}

FiniteCorr finitecorr_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("incidence matrix must be a nonempty array of rows");
  const int n = static_cast<int>(j.size());
  if (n > 64) throw ParseError("incidence matrix larger than 64 points");
  std::vector<std::uint64_t> rows;
  for (const json& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("incidence matrix must be square");
    std::uint64_t bits = 0;
    for (int y = 0; y < n; ++y) {
      const int v = integer(row[static_cast<std::size_t>(y)], "incidence entry");
      if (v != 0 && v != 1) throw ParseError("incidence entries must be 0 or 1");
      if (v) bits |= std::uint64_t{1} << y;
    }
    rows.push_back(bits);
  }
  return FiniteCorr(n, std::move(rows));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace rittforge::io
