// Exact arithmetic scalar types (GMP-backed) and their text forms.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace swtqft {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

inline bool is_integral(const Rational& value) {
    return value.get_den() == 1;
}

// GMP's C++ classes have no long long constructors; long is 64-bit on
// every platform this builds for.
static_assert(sizeof(long) == sizeof(long long));

inline Integer make_integer(long long v) {
    return Integer(static_cast<long>(v));
}

inline Rational make_rational(long long v) {
    return Rational(static_cast<long>(v));
}

}  // namespace swtqft
