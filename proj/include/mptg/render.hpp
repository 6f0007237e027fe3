#pragma once

#include <string>

#include "mptg/builder.hpp"
#include "mptg/verify.hpp"

namespace mptg {

// Standalone SVG, one row per vertex in index order: an interval bar plus a
// point dot (interval-point) or a tolerance underbar (tolerance). The x axis
// maps the min..max coordinate span onto 1000 units; all coordinates are
// computed in exact arithmetic and printed with at most three decimals, so
// the output is byte-deterministic.
std::string render_svg(const IntervalPointRep& rep);
std::string render_svg(const ToleranceRep& rep);

}  // namespace mptg
