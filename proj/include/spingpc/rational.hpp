#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spingpc {

/// Exact rational scalar used throughout the constraint machinery.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

Rat rat(long num, long den = 1);

/// Parses "p/q", integers, or decimal literals ("0.125", "1e-3", "-2.5e+1").
/// Decimals become exact decimal fractions. Throws std::invalid_argument.
Rat parse_rational(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

Rat rat_abs(const Rat& value);

Rat dot(std::span<const Rat> a, std::span<const Rat> b);

Rat sum(std::span<const Rat> values);

/// Nearest rational with the given denominator; used to turn floating
/// spectra into exact inputs for the rational pipeline.
Rat rationalize(double value, unsigned long denominator);

}  // namespace spingpc
