#pragma once

#include <cstdint>
#include <string_view>

#include "rittforge/poly.hpp"
#include "rittforge/random.hpp"

namespace rittforge::testing {

inline Poly P(std::string_view expr) { return parse_poly_expression(expr); }

inline Gaussian G(std::string_view text) { return Gaussian::parse(text); }

/// Property tests share the suite seed so RITTFORGE_SEED reproduces them.
inline std::uint64_t seed() { return default_seed(); }

}  // namespace rittforge::testing
