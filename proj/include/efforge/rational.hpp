#ifndef EFFORGE_RATIONAL_HPP
#define EFFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace efforge {

// Exact arbitrary-precision rational scalar. All core arithmetic is exact;
// nothing in the library touches floating point.
using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// Parses "p/q", "p", or "-p/q". Throws std::invalid_argument on malformed
// input or zero denominator.
Rational rational_from_string(const std::string& text);

// Canonical rendering: "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

// True iff value has an exact finite decimal expansion (denominator 2^a 5^b).
bool has_finite_decimal(const Rational& value);

// Exact decimal rendering, e.g. 3/4 -> "0.75". Requires has_finite_decimal.
std::string rational_to_decimal(const Rational& value);

Rational factorial(unsigned n);

// Product of every second factor down from n: n(n-2)(n-4)...; empty product
// for n <= 0 (covers the (-1)!! = 1 convention).
Rational double_factorial(long n);

// Binomial coefficient with integer arguments; 0 when b < 0 or b > a.
Rational binomial(unsigned a, unsigned b);

// Generalized binomial C(eta, s) = eta(eta-1)...(eta-s+1)/s! for rational eta.
Rational binomial_general(const Rational& eta, unsigned s);

RatVec zeros(int n);
Rational dot(const RatVec& a, const RatVec& b);

}  // namespace efforge

#endif
