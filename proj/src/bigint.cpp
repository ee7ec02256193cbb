#include "irrcount/bigint.hpp"

#include "irrcount/errors.hpp"

namespace irrcount {

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw NonIntegralResult(std::string(what) + ": division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw NonIntegralResult(std::string(what) + ": " + num.str() + " not divisible by " + den.str());
  return q;
}

BigInt to_integer(const Rational& r, const char* what) {
  return exact_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r), what);
}

}  // namespace irrcount
