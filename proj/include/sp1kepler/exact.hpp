#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sp1kepler {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(top, bottom); zero outside 0 <= bottom <= top.
BigInt binomial(long top, long bottom);

/// Exact conversion of a rational that is known to be an integer.
/// Throws std::domain_error otherwise.
BigInt to_integer(const Rational& q);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& q);

} // namespace sp1kepler
