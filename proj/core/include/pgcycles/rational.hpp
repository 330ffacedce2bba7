#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pgc {

/// Arbitrary-precision rational. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

/// Parses "7", "-3", "5/2". Throws ValidationError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Requires is_integer(value) and that it fits in a long.
long to_long(const Rational& value);

}  // namespace pgc
