#include "f4rigid/numeric.hpp"

#include <numeric>
#include <stdexcept>

namespace f4rigid {

Rat mod1(const Rat& x) {
  BigInt num = numerator(x);
  BigInt den = denominator(x);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return x - Rat(q);
}

std::string frac_string(const Rat& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rat parse_frac(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace f4rigid
