#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace adelic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "num", "-num" or "num/den" (den > 0 after normalization).
Rational parse_rational(std::string_view text);

/// Canonical form "num" or "num/den".
std::string rational_to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

} // namespace adelic
