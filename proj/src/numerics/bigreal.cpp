#include "numerics/bigreal.hpp"

#include "numerics/error.hpp"
#include "numerics/precision.hpp"

#include <boost/math/constants/constants.hpp>

#include <cctype>
#include <cmath>
#include <limits>

namespace lamzeta {

void PrecisionContext::validate() const {
  if (decimal_digits < 1) throw UsageError("decimal_digits must be >= 1");
  if (guard_digits < 0) throw UsageError("guard_digits must be >= 0");
  if (max_terms < 1) throw UsageError("max_terms must be >= 1");
  if (working_digits() > 5000) throw UsageError("working precision above 5000 digits is not supported");
}

PrecisionScope::PrecisionScope(const PrecisionContext& ctx) : PrecisionScope(ctx.working_digits()) {}

PrecisionScope::PrecisionScope(int digits10) : previous_(BigReal::default_precision()) {
  BigReal::default_precision(static_cast<unsigned>(digits10));
}

PrecisionScope::~PrecisionScope() { BigReal::default_precision(previous_); }

unsigned current_digits() { return BigReal::default_precision(); }

BigReal promote(const BigReal& v) { return BigReal(v, current_digits()); }

BigReal to_big(const Rational& q) {
  BigReal out;
  mpfr_set_q(out.backend().data(), q.backend().data(), MPFR_RNDN);
  return out;
}

BigReal to_big(std::int64_t v) {
  BigReal out;
  mpfr_set_sj(out.backend().data(), v, MPFR_RNDN);
  return out;
}

BigReal pi_value() {
  BigReal out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

BigReal ln2_value() {
  BigReal out;
  mpfr_const_log2(out.backend().data(), MPFR_RNDN);
  return out;
}

void sin_cos(const BigReal& x, BigReal& s, BigReal& c) {
  s = BigReal();
  c = BigReal();
  mpfr_sin_cos(s.backend().data(), c.backend().data(), x.backend().data(), MPFR_RNDN);
}

BigReal expm1(const BigReal& x) {
  BigReal out;
  mpfr_expm1(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

BigReal root_n(const BigReal& x, unsigned long n) {
  BigReal out;
  mpfr_rootn_ui(out.backend().data(), x.backend().data(), n, MPFR_RNDN);
  return out;
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw DomainError("expected an integer value");
  return boost::multiprecision::numerator(q).convert_to<std::int64_t>();
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigReal pow_rational(const BigReal& x, const Rational& q) {
  const BigInt& num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);
  BigReal out;
  if (den == 1 && num >= std::numeric_limits<long>::min() && num <= std::numeric_limits<long>::max()) {
    mpfr_pow_si(out.backend().data(), x.backend().data(), num.convert_to<long>(), MPFR_RNDN);
    return out;
  }
  if (num == 1 && den <= std::numeric_limits<unsigned long>::max()) {
    return root_n(x, den.convert_to<unsigned long>());
  }
  BigReal e = to_big(q);
  mpfr_pow(out.backend().data(), x.backend().data(), e.backend().data(), MPFR_RNDN);
  return out;
}

Rational parse_decimal_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  BigInt mantissa = 0;
  long exponent = 0;
  bool any_digit = false;
  bool after_point = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa = mantissa * 10 + (ch - '0');
      if (after_point) --exponent;
      any_digit = true;
    } else if (ch == '.' && !after_point) {
      after_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw UsageError("malformed number '" + std::string(text) + "'");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (digits_start == i) throw UsageError("malformed exponent in '" + std::string(text) + "'");
    exponent += std::stol(std::string(text.substr(start, i - start)));
  }
  if (i != text.size()) throw UsageError("malformed number '" + std::string(text) + "'");
  if (exponent > 4000 || exponent < -4000) throw UsageError("exponent out of range in '" + std::string(text) + "'");
  Rational out(mantissa);
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    out /= Rational(scale);
  } else {
    out *= Rational(scale);
  }
  return negative ? Rational(-out) : out;
}

std::string to_decimal(const BigReal& v, int sig_digits) {
  // In scientific notation the stream precision counts digits after the point.
  return v.str(static_cast<std::streamsize>(sig_digits > 1 ? sig_digits - 1 : 0), std::ios_base::scientific);
}

std::string to_roundtrip(const BigReal& v) {
  if (v == 0) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, 0, v.backend().data(), MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::string out = sign + digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

BigReal parse_big(const std::string& text, unsigned bits) {
  BigReal out;
  mpfr_set_prec(out.backend().data(), static_cast<mpfr_prec_t>(bits));
  if (mpfr_set_str(out.backend().data(), text.c_str(), 10, MPFR_RNDN) != 0) {
    throw UsageError("malformed decimal '" + text + "'");
  }
  return out;
}

unsigned precision_bits(const BigReal& v) {
  return static_cast<unsigned>(mpfr_get_prec(v.backend().data()));
}

double log10_abs(const BigReal& v) {
  if (v == 0) return -1.0e9;
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, v.backend().data(), MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

// --- BigComplex -------------------------------------------------------------

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigReal re = re_ * o.re_ - im_ * o.im_;
  BigReal im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  if (o.im_ == 0) return *this /= o.re_;
  const BigReal d = o.re_ * o.re_ + o.im_ * o.im_;
  BigReal re = (re_ * o.re_ + im_ * o.im_) / d;
  BigReal im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& o) {
  re_ /= o;
  im_ /= o;
  return *this;
}

BigComplex conj(const BigComplex& z) { return BigComplex(z.re(), -z.im()); }

BigReal abs(const BigComplex& z) {
  BigReal out;
  mpfr_hypot(out.backend().data(), z.re().backend().data(), z.im().backend().data(), MPFR_RNDN);
  return out;
}

BigReal norm(const BigComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

BigReal arg(const BigComplex& z) {
  BigReal out;
  mpfr_atan2(out.backend().data(), z.im().backend().data(), z.re().backend().data(), MPFR_RNDN);
  return out;
}

BigComplex exp(const BigComplex& z) {
  BigReal mag = boost::multiprecision::exp(z.re());
  if (z.im() == 0) return BigComplex(mag, BigReal(0));
  BigReal s, c;
  sin_cos(z.im(), s, c);
  return BigComplex(mag * c, mag * s);
}

BigComplex expm1(const BigComplex& z) {
  if (z.im() == 0) return BigComplex(expm1(z.re()), BigReal(0));
  BigReal s, c;
  sin_cos(z.im(), s, c);
  if (abs(z) < 1) {
    // e^a cos b - 1 = expm1(a) cos b - 2 sin^2(b/2)
    BigReal half = z.im() / 2;
    BigReal sh = boost::multiprecision::sin(half);
    BigReal em1 = expm1(z.re());
    BigReal re = em1 * c - 2 * sh * sh;
    BigReal im = (em1 + 1) * s;
    return BigComplex(std::move(re), std::move(im));
  }
  BigReal mag = boost::multiprecision::exp(z.re());
  return BigComplex(mag * c - 1, mag * s);
}

BigComplex log(const BigComplex& z) {
  return BigComplex(boost::multiprecision::log(abs(z)), arg(z));
}

BigComplex polar_unit(const BigReal& theta) {
  BigReal s, c;
  sin_cos(theta, s, c);
  return BigComplex(std::move(c), std::move(s));
}

BigComplex promote(const BigComplex& z) { return BigComplex(promote(z.re()), promote(z.im())); }

}  // namespace lamzeta
