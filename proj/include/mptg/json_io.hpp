#pragma once

#include <string>
#include <variant>

#include "mptg/builder.hpp"
#include "mptg/verify.hpp"

namespace mptg {

// {"vertices":[{"id":1,"a":"...","b":"...","p":"..."}, ...]}, ids 1-based in
// vertex order, rationals formatted per format_rational. Tolerance
// representations carry "t" instead of "p".
std::string to_json(const IntervalPointRep& rep);
std::string to_json(const ToleranceRep& rep);

using AnyRep = std::variant<IntervalPointRep, ToleranceRep>;

// Dispatches on the per-vertex "p"/"t" key; ids may come in any order but
// must be exactly 1..n. Rationals accept integer, fraction and decimal
// spellings. Value-level validation (a <= p <= b resp. a < b) runs after
// loading. Throws ParseError on malformed documents and ContractError on
// invalid values.
AnyRep parse_representation(const std::string& text);

}  // namespace mptg
