#include "powertree/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "powertree/errors.hpp"

namespace powertree {

namespace {

[[noreturn]] void overflow() {
  throw Error(ErrorCode::kNumericOverflow, "cost arithmetic overflows 64 bits");
}

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::kMalformedLine,
                  "invalid cost '" + std::string(whole) + "'");
    }
    value = checked_add(checked_mul(value, 10), ch - '0');
  }
  return value;
}

}  // namespace

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) overflow();
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) overflow();
  return out;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

Rational parse_cost(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::kMalformedLine, "empty cost");
  }
  if (text.front() == '-') {
    throw Error(ErrorCode::kNegativeCost,
                "negative cost '" + std::string(text) + "'");
  }
  std::string_view body = text.front() == '+' ? text.substr(1) : text;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_digits(body.substr(0, slash), text);
    const std::int64_t den = parse_digits(body.substr(slash + 1), text);
    if (slash == 0 || slash + 1 == body.size() || den == 0) {
      throw Error(ErrorCode::kMalformedLine,
                  "invalid cost '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }
  const auto dot = body.find('.');
  const std::string_view int_part = body.substr(0, dot);
  const std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw Error(ErrorCode::kMalformedLine,
                "invalid cost '" + std::string(text) + "'");
  }
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den = checked_mul(den, 10);
  const std::int64_t whole = parse_digits(int_part, text);
  const std::int64_t frac = parse_digits(frac_part, text);
  return Rational(checked_add(checked_mul(whole, den), frac), den);
}

std::string format_cost(const Rational& value) {
  std::int64_t den = value.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) {
    return std::to_string(value.numerator()) + "/" +
           std::to_string(value.denominator());
  }
  const int digits = std::max(twos, fives);
  std::int64_t scaled_den = 1;
  for (int i = 0; i < digits; ++i) scaled_den = checked_mul(scaled_den, 10);
  const std::int64_t scaled =
      checked_mul(value.numerator(), scaled_den / value.denominator());
  const bool negative = scaled < 0;
  const std::int64_t magnitude = negative ? -scaled : scaled;
  std::string out = std::to_string(magnitude / scaled_den);
  if (digits > 0) {
    std::string frac = std::to_string(magnitude % scaled_den);
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  return negative ? "-" + out : out;
}

double to_double(const Rational& value) {
  return static_cast<double>(value.numerator()) /
         static_cast<double>(value.denominator());
}

}  // namespace powertree
