#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mptg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Accepts integers ("3", "-12"), fractions ("3/4", "-21/5") and decimals
// ("7.1", "-0.25"). Throws ContractError on anything else, including a zero
// denominator.
Rat parse_rational(std::string_view text);

// "n" when the value is integral, "n/d" otherwise (d > 0, fully reduced).
std::string format_rational(const Rat& value);

}  // namespace mptg
