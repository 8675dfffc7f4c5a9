#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace lamzeta {

using BigReal = boost::multiprecision::mpfr_float;
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Digits of the current default BigReal precision.
unsigned current_digits();

/// Copy of `v` rounded to the current default precision.
BigReal promote(const BigReal& v);
BigReal to_big(const Rational& q);
BigReal to_big(std::int64_t v);

BigReal pi_value();
BigReal ln2_value();

void sin_cos(const BigReal& x, BigReal& s, BigReal& c);
BigReal expm1(const BigReal& x);
BigReal root_n(const BigReal& x, unsigned long n);

/// x^q for x > 0 and exact rational q; integer and reciprocal-integer
/// exponents take exact paths.
BigReal pow_rational(const BigReal& x, const Rational& q);

bool is_integer(const Rational& q);
std::int64_t to_int64(const Rational& q);
/// Largest integer <= q.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Exact decimal digits of a finite double-free literal such as "-1.25e-3".
Rational parse_decimal_rational(std::string_view text);

/// Scientific notation with `sig_digits` significant digits.
std::string to_decimal(const BigReal& v, int sig_digits);
/// Shortest decimal string that reads back to exactly `v` at its precision.
std::string to_roundtrip(const BigReal& v);
/// Parses a decimal string at `bits` of precision.
BigReal parse_big(const std::string& text, unsigned bits);
unsigned precision_bits(const BigReal& v);

/// log10 |v|, or a very negative number for zero.
double log10_abs(const BigReal& v);

class BigComplex {
 public:
  BigComplex() : re_(0), im_(0) {}
  BigComplex(BigReal re) : re_(std::move(re)), im_(0) {}  // NOLINT: implicit by intent
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}

  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }
  BigReal& re() { return re_; }
  BigReal& im() { return im_; }

  bool is_real() const { return im_ == 0; }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigReal& o);
  BigComplex& operator/=(const BigReal& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
  friend BigComplex operator*(const BigReal& b, BigComplex a) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigReal& b) { return a /= b; }
  friend BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re_, -a.im_); }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  BigReal re_;
  BigReal im_;
};

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// e^z - 1 without cancellation for small |z|.
BigComplex expm1(const BigComplex& z);
/// Principal branch.
BigComplex log(const BigComplex& z);
/// e^{i theta}
BigComplex polar_unit(const BigReal& theta);
BigComplex promote(const BigComplex& z);

}  // namespace lamzeta
