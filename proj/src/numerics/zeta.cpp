#include "numerics/zeta.hpp"

#include "numerics/bernoulli.hpp"
#include "numerics/error.hpp"
#include "numerics/gamma.hpp"

#include <cmath>

namespace lamzeta {
namespace {

BigReal magnitude(const BigReal& v) { return boost::multiprecision::abs(v); }
BigReal magnitude(const BigComplex& v) { return abs(v); }
BigReal real_part(const BigReal& v) { return v; }
BigReal real_part(const BigComplex& v) { return v.re(); }

// n^{-s} given ln n.
BigReal neg_power(const BigReal& log_n, const BigReal& s) { return boost::multiprecision::exp(-s * log_n); }
BigComplex neg_power(const BigReal& log_n, const BigComplex& s) {
  return exp(BigComplex(-s.re() * log_n, -s.im() * log_n));
}

template <class T>
T from_real(const BigReal& v) {
  return T(v);
}

// Euler-Maclaurin:
//   zeta(s) = sum_{n<M} n^{-s} + M^{1-s}/(s-1) + M^{-s}/2
//           + sum_{k>=1} B_{2k}/(2k)! (s)_{2k-1} M^{-s-2k+1} + R_K
// with the remainder estimated by |T_{K+1}| |s+2K+1| / (Re s + 2K + 1).
template <class T>
T euler_maclaurin(const T& s) {
  const unsigned digits = current_digits();
  const double abs_s = magnitude(s).template convert_to<double>();
  const double sigma = real_part(s).template convert_to<double>();
  const double target = -static_cast<double>(digits) - 3.0;
  unsigned long cut = static_cast<unsigned long>(std::ceil(0.4 * digits + abs_s)) + 2;

  for (int attempt = 0; attempt < 8; ++attempt, cut *= 2) {
    T sum = from_real<T>(BigReal(0));
    for (unsigned long n = 1; n < cut; ++n) {
      if (n == 1) {
        sum += from_real<T>(BigReal(1));
        continue;
      }
      sum += neg_power(boost::multiprecision::log(to_big(static_cast<std::int64_t>(n))), s);
    }
    const BigReal big_cut = to_big(static_cast<std::int64_t>(cut));
    const BigReal log_cut = boost::multiprecision::log(big_cut);
    const T cut_pow = neg_power(log_cut, s);  // M^{-s}
    const T one = from_real<T>(BigReal(1));
    sum += cut_pow * big_cut / (s - one);
    sum += cut_pow / BigReal(2);

    T rising = s;                       // (s)_{2k-1}
    T cut_term = cut_pow / big_cut;     // M^{-s-2k+1}
    const BigReal inv_cut2 = 1 / (big_cut * big_cut);
    double prev_log = 1.0e300;
    bool converged = false;
    bool diverging = false;
    for (unsigned k = 1; k < 6 * digits + 200; ++k) {
      T term = rising * cut_term * even_bernoulli_coefficient(k);
      const double log_term = log10_abs(magnitude(term));
      if (log_term > prev_log) {
        diverging = true;
        break;
      }
      sum += term;
      prev_log = log_term;
      const T a = s + from_real<T>(to_big(2 * k - 1));
      const T b = s + from_real<T>(to_big(2 * k));
      rising *= a * b;
      cut_term *= inv_cut2;
      // Estimate of the remainder after this term.
      T next = rising * cut_term * even_bernoulli_coefficient(k + 1);
      const T c = s + from_real<T>(to_big(2 * k + 1));
      const double widen = magnitude(c).template convert_to<double>() / (sigma + 2.0 * k + 1.0);
      if (sigma + 2.0 * k + 1.0 > 0 && log10_abs(magnitude(next)) + std::log10(widen) < target) {
        converged = true;
        break;
      }
    }
    if (converged) return sum;
    if (!diverging) break;
  }
  throw ConvergenceError("Euler-Maclaurin expansion for zeta did not converge");
}

bool is_integral(const BigReal& v) { return v == boost::multiprecision::floor(v); }

}  // namespace

Rational zeta_even_coefficient(unsigned m) {
  if (m == 0) return Rational(-1, 2);
  Rational c = bernoulli(2 * m) / Rational(2 * factorial(2 * m));
  c *= Rational(boost::multiprecision::pow(BigInt(2), 2 * m));
  return (m % 2 == 1) ? c : Rational(-c);
}

BigReal zeta_even(unsigned m, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("zeta_even requires m >= 1");
  ctx.validate();
  PrecisionScope scope(ctx);
  return to_big(zeta_even_coefficient(m)) * boost::multiprecision::pow(pi_value(), 2 * m);
}

Rational zeta_nonpositive_int(std::int64_t n) {
  if (n < 0) throw DomainError("zeta_nonpositive_int expects n >= 0");
  if (n == 0) return Rational(-1, 2);
  return -bernoulli(static_cast<unsigned>(n + 1)) / Rational(n + 1);
}

namespace detail {

BigReal zeta(const BigReal& s) {
  if (s == 1) throw DomainError("zeta has a pole at s = 1");
  if (s <= 0 && is_integral(s)) {
    return to_big(zeta_nonpositive_int(-s.convert_to<std::int64_t>()));
  }
  if (s < 0) {
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
    const BigReal one_minus = 1 - s;
    const BigReal pi = pi_value();
    return boost::multiprecision::pow(BigReal(2), s) * boost::multiprecision::pow(pi, s - 1) *
           boost::multiprecision::sin(pi * s / 2) * gamma(one_minus) * euler_maclaurin(one_minus);
  }
  return euler_maclaurin(s);
}

BigReal zeta(const Rational& s) {
  if (is_integer(s) && s <= 0) return to_big(zeta_nonpositive_int(-to_int64(s)));
  return zeta(to_big(s));
}

BigComplex zeta(const BigComplex& s) {
  if (s.im() == 0) return BigComplex(zeta(s.re()), BigReal(0));
  return euler_maclaurin(s);
}

BigReal gamma_zeta_product(const Rational& s) {
  if (s > 0) {
    if (s == 1) throw DomainError("Gamma(s) zeta(s) has a pole at s = 1");
    const BigReal x = to_big(s);
    return gamma(x) * zeta(x);
  }
  // Gamma(s) zeta(s) = zeta(1-s) (2 pi)^s / (2 cos(pi s / 2))
  const Rational one_minus = 1 - s;
  BigReal cosine;
  if (is_integer(s)) {
    const std::int64_t k = to_int64(s);
    if (k % 2 != 0 || k == 0) throw DomainError("Gamma(s) zeta(s) has a pole at s = " + std::to_string(k));
    cosine = ((-k / 2) % 2 == 0) ? BigReal(1) : BigReal(-1);
  } else {
    cosine = boost::multiprecision::cos(pi_value() * to_big(s) / 2);
  }
  const BigReal two_pi = 2 * pi_value();
  return zeta(one_minus) * pow_rational(two_pi, s) / (2 * cosine);
}

}  // namespace detail

BigReal zeta_real(const BigReal& s, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  return detail::zeta(promote(s));
}

BigComplex zeta_complex(const BigComplex& s, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  return detail::zeta(promote(s));
}

BigReal gamma_zeta_product(const Rational& s, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  return detail::gamma_zeta_product(s);
}

}  // namespace lamzeta
