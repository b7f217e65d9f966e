#pragma once

#include <string>

#include "skeinkit/homfly.hpp"

namespace skeinkit {

// Polynomial as a JSON object {"terms": [{"v": 2, "z": 2, "c": 1}, ...]},
// terms in the same (z-exponent, v-exponent) order as to_text. Coefficients
// that fit a 64-bit signed integer are emitted as JSON numbers; anything
// larger becomes a decimal string.
std::string poly_to_json(const LaurentPoly2& p);

// InvariantReport as pretty-printed JSON. poly_as_terms selects the "homfly"
// field rendering: the terms object above, or the sorted-term text string.
std::string report_to_json(const InvariantReport& r, bool poly_as_terms = true);

}  // namespace skeinkit
