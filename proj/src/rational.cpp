#include "mptg/rational.hpp"

#include <cctype>

#include "mptg/errors.hpp"

namespace mptg {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Int parse_unsigned(std::string_view s, std::string_view whole) {
    if (!all_digits(s)) throw ContractError("bad rational literal: '" + std::string(whole) + "'");
    return Int(std::string(s));
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ContractError("bad rational literal: '" + std::string(text) + "'");

    Rat value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Int num = parse_unsigned(s.substr(0, slash), text);
        Int den = parse_unsigned(s.substr(slash + 1), text);
        if (den == 0) throw ContractError("zero denominator in '" + std::string(text) + "'");
        value = Rat(num, den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw ContractError("bad rational literal: '" + std::string(text) + "'");
        Int scale = 1;
        Int num = whole.empty() ? Int(0) : parse_unsigned(whole, text);
        if (!frac.empty()) {
            Int frac_num = parse_unsigned(frac, text);
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            num = num * scale + frac_num;
        }
        value = Rat(num, scale);
    } else {
        value = Rat(parse_unsigned(s, text));
    }
    return negative ? Rat(-value) : value;
}

std::string format_rational(const Rat& value) {
    Int num = numerator(value);
    Int den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace mptg
