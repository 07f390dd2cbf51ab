#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace cstar {

// Exact scalars. Rational is always stored reduced with positive denominator;
// equality is structural equality of reduced forms. No floating point is used
// anywhere in this library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

// Renders "p/q" reduced, or a plain integer when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Inverse of to_string: accepts "p" or "p/q" (whitespace-free). Unreduced
// input is accepted and canonicalized.
inline Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("invalid rational: \"" + text + "\"");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

inline Int floor_of(const Rational& q) {
  Int quot = numerator(q) / denominator(q);  // truncates toward zero
  if (numerator(q) < 0 && quot * denominator(q) != numerator(q)) --quot;
  return quot;
}

inline Int ceil_of(const Rational& q) {
  Int f = floor_of(q);
  return f * denominator(q) == numerator(q) ? f : f + 1;
}

// Checked narrowing for rendering layers; graph weights always fit.
inline long long to_int64(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer exceeds 64-bit render range");
  return v.convert_to<long long>();
}

}  // namespace cstar
