// Textual divisor input.
//
//   divisor := term (('+' | '-') term)*
//   term    := INT ['/' INT] ['@' LABEL]
//
// Whitespace is insignificant, the first term may carry a sign, omitted
// labels are generated as P0, P1, ... (skipping explicit names), duplicate
// labels sum.  Alternatively a JSON object {"label": "num/den", ...}.
#pragma once

#include <string>

#include "pdr/divisor.hpp"
#include "pdr/errors.hpp"

namespace pdr {

QDivisor parse_divisor(const std::string& text);

}  // namespace pdr
