#include "hiernet/numeric.hpp"

#include <cstdio>
#include <stdexcept>

namespace hiernet {

BigInt ipow(const BigInt& base, std::int64_t exp) {
  if (exp < 0) throw std::domain_error("ipow: negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

BigInt choose2(const BigInt& m) {
  if (m < 2) return 0;
  return m * (m - 1) / 2;
}

BigInt choose3(const BigInt& m) {
  if (m < 3) return 0;
  return m * (m - 1) * (m - 2) / 6;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string fraction_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string float_string(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace hiernet
