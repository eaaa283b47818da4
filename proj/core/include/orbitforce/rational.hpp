#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace orbitforce {

/// Exact arbitrary-precision rational; always in lowest terms with positive
/// denominator. Everything geometric is computed with these — no floating
/// point anywhere near the realization code.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms; integers render without the denominator ("0",
/// "-1", "1/2").
std::string rational_to_string(const Rational& r);

/// Accepts both "p" and "p/q". Throws std::runtime_error on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace orbitforce
