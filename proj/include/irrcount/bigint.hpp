#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace irrcount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }
inline BigInt ipow(std::int64_t base, unsigned e) { return boost::multiprecision::pow(BigInt(base), e); }

inline std::string to_string(const BigInt& v) { return v.str(); }

// Exact division; throws NonIntegralResult on a remainder.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* what);
BigInt to_integer(const Rational& r, const char* what);

}  // namespace irrcount
