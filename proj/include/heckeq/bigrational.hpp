#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace heckeq {

// Ground coefficients. cpp_rational keeps gcd(|num|, den) = 1, den > 0 and
// zero as 0/1, which is exactly the canonical form required here.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

} // namespace heckeq
