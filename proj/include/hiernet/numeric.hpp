#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace hiernet {

// All structural counts are exact. Sizes, triangle counts etc. overflow 64 bits
// already for modest (n, k), so everything that can grow goes through BigInt and
// every average/coefficient through Rational.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(const BigInt& base, std::int64_t exp);

// Binomial coefficients C(m, 2) and C(m, 3); zero for m below 2 resp. 3.
BigInt choose2(const BigInt& m);
BigInt choose3(const BigInt& m);

// Division that is known to be exact; throws std::logic_error on a remainder
// (that would mean a formula is wrong, not an input).
BigInt exact_div(const BigInt& num, const BigInt& den);

double to_double(const Rational& q);

// "p/q", or just "p" for integers. Canonical lowest terms.
std::string fraction_string(const Rational& q);

// 12 significant digits, the fixed float rendering for CSV output.
std::string float_string(double v);

}  // namespace hiernet
