#include "mptg/render.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "mptg/rational.hpp"

namespace mptg {

namespace {

Int floor_rat(const Rat& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

// Nearest multiple of 1/1000, half rounded up. Exact integer math keeps the
// rendered output byte-deterministic across platforms.
Int to_milli(const Rat& q) { return floor_rat(q * 1000 + Rat(1, 2)); }

std::string fmt_milli(const Int& m) {
    Int whole = m / 1000;
    Int frac = m % 1000;
    std::string sign;
    if (frac < 0 || whole < 0) {
        sign = "-";
        whole = -whole;
        frac = -frac;
    }
    std::string out = sign + whole.str();
    if (frac != 0) {
        std::string digits = frac.str();
        digits.insert(digits.begin(), 3 - digits.size(), '0');
        while (digits.back() == '0') digits.pop_back();
        out += "." + digits;
    }
    return out;
}

constexpr int kMarginLeft = 70;
constexpr int kPlotWidth = 1000;
constexpr int kMarginRight = 20;
constexpr int kRowHeight = 26;
constexpr int kFirstRowY = 40;

struct Scale {
    Rat min;
    Rat span;  // never zero

    // x pixel position in millis for a data coordinate
    Int at(const Rat& v) const {
        return Int(kMarginLeft) * 1000 + to_milli(Rat(kPlotWidth) * (v - min) / span);
    }
    // x pixel extent in millis for a data length
    Int extent(const Rat& len) const { return to_milli(Rat(kPlotWidth) * len / span); }
};

template <typename Rep, typename Lo, typename Hi, typename Row>
std::string render(const Rep& rep, Lo lo, Hi hi, Row row) {
    const int n = rep.size();
    Rat min = 0, max = 1;
    for (int v = 0; v < n; ++v) {
        const auto& rv = rep.vertices[static_cast<std::size_t>(v)];
        if (v == 0) {
            min = lo(rv);
            max = hi(rv);
        } else {
            min = std::min(min, lo(rv));
            max = std::max(max, hi(rv));
        }
    }
    Scale scale{min, max - min};
    if (scale.span == 0) scale.span = 1;  // all coordinates coincide

    const int width = kMarginLeft + kPlotWidth + kMarginRight;
    const int height = kFirstRowY + kRowHeight * std::max(n, 1);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    out << "  <style>\n"
           "    text.label { font: 14px sans-serif; fill: #333; }\n"
           "    line.interval { stroke: #2457a8; stroke-width: 3; }\n"
           "    line.tick { stroke: #2457a8; stroke-width: 2; }\n"
           "    line.tolerance { stroke: #c2571a; stroke-width: 3; }\n"
           "    circle { fill: #c2571a; }\n"
           "  </style>\n";
    for (int v = 0; v < n; ++v) {
        const int y = kFirstRowY + kRowHeight * v;
        const auto& rv = rep.vertices[static_cast<std::size_t>(v)];
        out << "  <text x=\"10\" y=\"" << (y + 5) << "\" class=\"label\">v" << (v + 1)
            << "</text>\n";
        const Int x1 = scale.at(lo(rv));
        const Int x2 = x1 + scale.extent(hi(rv) - lo(rv));
        out << "  <line class=\"interval\" x1=\"" << fmt_milli(x1) << "\" y1=\"" << y
            << "\" x2=\"" << fmt_milli(x2) << "\" y2=\"" << y << "\"/>\n";
        out << "  <line class=\"tick\" x1=\"" << fmt_milli(x1) << "\" y1=\"" << (y - 5)
            << "\" x2=\"" << fmt_milli(x1) << "\" y2=\"" << (y + 5) << "\"/>\n";
        out << "  <line class=\"tick\" x1=\"" << fmt_milli(x2) << "\" y1=\"" << (y - 5)
            << "\" x2=\"" << fmt_milli(x2) << "\" y2=\"" << (y + 5) << "\"/>\n";
        row(out, rv, scale, x1, y);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_svg(const IntervalPointRep& rep) {
    return render(
        rep, [](const RepVertex& rv) { return rv.a; },
        [](const RepVertex& rv) { return rv.b; },
        [](std::ostringstream& out, const RepVertex& rv, const Scale& scale, const Int&,
           int y) {
            out << "  <circle cx=\"" << fmt_milli(scale.at(rv.p)) << "\" cy=\"" << y
                << "\" r=\"5\"/>\n";
        });
}

std::string render_svg(const ToleranceRep& rep) {
    return render(
        rep, [](const TolVertex& tv) { return tv.a; },
        [](const TolVertex& tv) { return tv.b; },
        [](std::ostringstream& out, const TolVertex& tv, const Scale& scale,
           const Int& x1, int y) {
            const Int xt = x1 + scale.extent(tv.t);
            out << "  <line class=\"tolerance\" x1=\"" << fmt_milli(x1) << "\" y1=\""
                << (y + 8) << "\" x2=\"" << fmt_milli(xt) << "\" y2=\"" << (y + 8)
                << "\"/>\n";
        });
}

}  // namespace mptg
