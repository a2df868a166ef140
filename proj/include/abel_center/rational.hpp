#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace abel_center {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator.
using Rational = mpq_class;

/// Parses "num/den", "int", or a finite decimal such as "-0.125".
/// Throws InputError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "num/den" or "int", reduced even if the input is not.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace abel_center
