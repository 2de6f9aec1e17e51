#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever once C++20
// synthesizes the reversed candidates. Exact non-template overloads win
// overload resolution and sidestep it.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, long long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

namespace powertree {

using Rational = boost::rational<std::int64_t>;

// Instance-scaled integer cost. All combinatorial comparisons run on Units;
// an instance's scale converts them back to exact rationals.
using Units = std::int64_t;

// Accepts "12", "2.50", ".5" and "3/4". Throws Error(kMalformedLine) or
// Error(kNegativeCost).
Rational parse_cost(std::string_view text);

// Terminating fractions print as minimal decimals ("2.5"); anything else as
// "p/q". parse_cost(format_cost(x)) == x.
std::string format_cost(const Rational& value);

double to_double(const Rational& value);

// Overflow-checked helpers.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace powertree
