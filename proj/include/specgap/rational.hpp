#pragma once

#include <gmpxx.h>

#include <string>

namespace specgap {

/// Exact rational scalar. All measure and group-algebra arithmetic is exact;
/// floating point enters only at the linear-algebra boundary.
using Rational = mpq_class;

/// Parses "p/q" or "p" (arbitrary precision). Throws ConfigError on junk
/// or on a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

inline double rational_to_double(const Rational& r) { return r.get_d(); }

}  // namespace specgap
