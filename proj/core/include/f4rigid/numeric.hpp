#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace f4rigid {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical representative of x in [0, 1).
Rat mod1(const Rat& x);

/// Renders "num/den" with positive denominator in lowest terms, e.g. "0/1", "1/2".
std::string frac_string(const Rat& x);

/// Parses "a/b" or a bare integer "a". Throws std::invalid_argument on junk.
Rat parse_frac(const std::string& text);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace f4rigid
