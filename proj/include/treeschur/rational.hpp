#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace treeschur {

// Exact arbitrary-precision rationals; cpp_rational keeps the canonical
// form (positive denominator, reduced) on every operation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }

// q^e for integer e (negative exponents allowed, q != 0).
Rational rational_pow(long base, long exp);

double to_double(const Rational& r);

// Always "num/den" with decimal integers, e.g. "-5/3", "0/1".
std::string rational_str(const Rational& r);

// Accepts "num", "num/den", optional sign, surrounding spaces.
Rational parse_rational(std::string_view s);

}  // namespace treeschur
