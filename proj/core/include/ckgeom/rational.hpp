#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ckgeom {

/// Exact rational number. GMP keeps values in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;

/// Canonical text form "num/den" (the denominator is always written).
std::string to_string(const Rational& value);

/// Parses "num/den" or "num". The result is reduced; a zero denominator or
/// any stray character raises FormatError.
Rational parse_rational(std::string_view text);

} // namespace ckgeom
