#include "sp1kepler/exact.hpp"

#include <stdexcept>

namespace sp1kepler {

BigInt binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  if (bottom > top - bottom) bottom = top - bottom;
  BigInt result = 1;
  for (long i = 1; i <= bottom; ++i) {
    result *= top - bottom + i;
    result /= i;  // exact: result is C(top - bottom + i, i) here
  }
  return result;
}

BigInt to_integer(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw std::domain_error("rational " + to_string(q) + " is not an integer");
  }
  return boost::multiprecision::numerator(q);
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

} // namespace sp1kepler
