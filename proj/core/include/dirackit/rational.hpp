#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dirackit {

/// Exact arbitrary-precision rational number.
using Rational = mpq_class;

/// A point of Q^n.
using RationalPoint = std::vector<Rational>;

/// Parses "p", "p/q", or a finite decimal such as "-0.25". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1) representation.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

std::vector<double> to_double(const RationalPoint& point);

} // namespace dirackit
