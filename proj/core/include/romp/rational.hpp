#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace romp {

/// Exact signed rational backed by GMP. Always kept canonical
/// (denominator > 0, gcd(num, den) = 1).
using Rational = mpq_class;

/// Raised when a mathematical precondition of an operation is violated
/// (signed input where a positive measure is required, an infinite
/// reciprocal norm, a vanishing moment, ...).
class MeasureError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parses "p/q" or "p" with optional leading '-' into a canonical rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace romp
