#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "rittforge/affine.hpp"
#include "rittforge/characters.hpp"
#include "rittforge/corr_finite.hpp"
#include "rittforge/decompose.hpp"
#include "rittforge/equivalence.hpp"
#include "rittforge/hcorr.hpp"
#include "rittforge/ratfun.hpp"

namespace rittforge::io {

using nlohmann::json;

// Every reader throws ParseError on malformed input.

json to_json(const Gaussian& g);
Gaussian gaussian_from_json(const json& j);

/// {"coeffs": ["p/q" | "p/q+r/s i", ...]}, ascending degree.
json to_json(const Poly& p);
/// Also accepts {"expr": "z^2+1"}.
Poly poly_from_json(const json& j);

/// {"num": Poly, "den": Poly}.
json to_json(const RatFun& r);
/// Also accepts a bare Poly document.
RatFun ratfun_from_json(const json& j);

/// {"a": ..., "b": ...}.
json to_json(const AffineMap& f);
AffineMap affine_from_json(const json& j);

/// {"factors": [Poly, ...], "invariants": {"length": n, "degrees": [...]}}.
json to_json(const Decomposition& d);
/// Validates every factor; the "invariants" member is ignored on input.
Decomposition decomposition_from_json(const json& j);

json to_json(const RittInvariants& inv);

/// {"type": "affine_shuffle" | "chebyshev_swap" | "monomial_swap",
///  "position": j, "A": AffineMap, "k": k, "r": r}.
json to_json(const RittMove& m);
RittMove move_from_json(const json& j);

/// "0", an exact value string, or {"base": "...", "exp": n}.
json to_json(const CharValue& v);
CharValue charvalue_from_json(const json& j);

/// {"A": AffineMap, "B": AffineMap}.
json to_json(const BiEquivWitness& w);
BiEquivWitness witness_from_json(const json& j);

/// {"coeffs_in_W": [RatFun, ...]} with the leading 1 stored explicitly.
json to_json(const HolCorr& k);
HolCorr hcorr_from_json(const json& j);

/// Incidence matrix, one 0/1 row per point.
json to_json(const FiniteCorr& k);
FiniteCorr finitecorr_from_json(const json& j);

/// Parses a JSON document from text; ParseError on syntax errors.
json parse(std::string_view text);

}  // namespace rittforge::io
