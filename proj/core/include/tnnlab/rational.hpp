#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace tnnlab {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<int>;

/// Parses "7", "-3/2" or a finite decimal such as "0.25" into an exact rational.
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals ("1,1/2,3").
RatVector parse_rational_list(std::string_view text);

/// Canonical "p/q" form ("3", "-3/2").
std::string to_string(const Rational& q);

/// Fixed-point rendering rounded half away from zero, e.g. to_decimal(2/3, 4) == "0.6667".
std::string to_decimal(const Rational& q, int digits = 12);

double to_double(const Rational& q);
long double to_long_double(const Rational& q);

/// Exact binary value of a finite double.
Rational from_double(double x);

Rational lcm_of_denominators(const RatVector& v);

/// Uniform rational num/den with num in [lo*den, hi*den], den in [1, max_den].
Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den);

/// Strictly positive variant used by the samplers.
Rational random_positive_rational(std::mt19937_64& rng, int max_num, int max_den);

/// Bounded integer in [lo, hi] computed with modular reduction so that
/// results are reproducible across standard library implementations.
std::int64_t random_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace tnnlab
