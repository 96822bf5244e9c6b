#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ashwa {

/// Exact rational number. Probabilities, utilities and game parameters that
/// are compared against each other are kept in this type.
using Rational = mpq_class;

/// Exact value of a binary double (every finite double is a dyadic rational).
Rational rational_from_double(double v);

/// Parses "3/20", "0.15", "2e-4" or "7" exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// Nearest double.
double to_double(const Rational& r);
/// Exact decimal when the denominator divides a power of ten, otherwise the
/// shortest representation of the nearest double.
std::string to_decimal(const Rational& r);

}  // namespace ashwa
