#include "efforge/rational.hpp"

#include <cassert>
#include <stdexcept>

namespace efforge {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool has_finite_decimal(const Rational& value) {
  mpz_class den = value.get_den();
  while (den % 2 == 0) den /= 2;
  while (den % 5 == 0) den /= 5;
  return den == 1;
}

std::string rational_to_decimal(const Rational& value) {
  assert(has_finite_decimal(value));
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  unsigned twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  unsigned scale = twos > fives ? twos : fives;
  mpz_class pow10 = 1;
  for (unsigned i = 0; i < scale; ++i) pow10 *= 10;
  // num/den scaled so the denominator becomes 10^scale exactly
  mpz_class scaled = num * (pow10 / value.get_den());
  mpz_class integral = scaled / pow10;
  mpz_class frac = scaled % pow10;
  if (scale == 0) return sign + integral.get_str();
  std::string digits = frac.get_str();
  digits.insert(digits.begin(), scale - digits.size(), '0');
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (digits == "0") return sign + integral.get_str();
  return sign + integral.get_str() + "." + digits;
}

Rational factorial(unsigned n) {
  Rational r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational double_factorial(long n) {
  Rational r = 1;
  for (long i = n; i >= 2; i -= 2) r *= i;
  return r;
}

Rational binomial(unsigned a, unsigned b) {
  if (b > a) return 0;
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), a, b);
  return Rational(z);
}

Rational binomial_general(const Rational& eta, unsigned s) {
  Rational num = 1;
  for (unsigned j = 0; j < s; ++j) num *= eta - Rational(j);
  return num / factorial(s);
}

RatVec zeros(int n) { return RatVec(static_cast<size_t>(n), Rational(0)); }

Rational dot(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

}  // namespace efforge
