#include "numerics/gamma.hpp"

#include "numerics/bernoulli.hpp"
#include "numerics/error.hpp"

#include <cmath>
#include <deque>
#include <map>

namespace lamzeta {
namespace {

// B_{2k} / (2k (2k-1)), the Stirling series coefficients.
const BigReal& stirling_coefficient(unsigned k) {
  thread_local std::map<unsigned, std::deque<BigReal>> cache;
  auto& column = cache[current_digits()];
  while (column.size() <= k) {
    const unsigned idx = static_cast<unsigned>(column.size());
    if (idx == 0) {
      column.emplace_back(0);
      continue;
    }
    const unsigned two_k = 2 * idx;
    column.push_back(to_big(bernoulli(two_k) / Rational(two_k * (two_k - 1))));
  }
  return column[k];
}

double log10_abs_bernoulli(unsigned n) { return log10_abs(to_big(bernoulli(n))); }

}  // namespace

namespace detail {

BigComplex gamma(const BigComplex& s) {
  if (s.im() == 0 && s.re() <= 0 && s.re() == boost::multiprecision::floor(s.re())) {
    throw DomainError("Gamma has a pole at non-positive integer " + to_decimal(s.re(), 6));
  }
  const unsigned digits = current_digits();
  // Shift the argument right until the Stirling series reaches full precision;
  // the remainder is about e^{-2 pi |w|} at its smallest.
  const double min_re = 0.4 * digits + 4.0;
  const double re = s.re().convert_to<double>();
  const long shift = re < min_re ? static_cast<long>(std::ceil(min_re - re)) : 0;

  BigComplex w = s + BigComplex(to_big(shift));
  BigComplex logw = log(w);
  BigComplex half_log_2pi(boost::multiprecision::log(2 * pi_value()) / 2);
  BigComplex sum = (w - BigComplex(BigReal(0.5))) * logw - w + half_log_2pi;

  // |R_K| <= |B_{2K+2}| / ((2K+2)(2K+1)|w|^{2K+1}) * sec^{2K+2}(arg(w)/2)
  const double log10_abs_w = log10_abs(abs(w));
  const double half_angle = std::fabs(arg(w).convert_to<double>()) / 2.0;
  const double log10_sec = -std::log10(std::cos(half_angle));
  const double target = -static_cast<double>(digits) - 3.0;

  const BigComplex inv_w = BigComplex(BigReal(1)) / w;
  const BigComplex inv_w2 = inv_w * inv_w;
  BigComplex power = inv_w;
  bool converged = false;
  for (unsigned k = 1; k < 4 * digits + 50; ++k) {
    sum += power * stirling_coefficient(k);
    power *= inv_w2;
    const unsigned next = 2 * k + 2;
    const double bound = log10_abs_bernoulli(next) - std::log10(static_cast<double>(next) * (next - 1)) -
                         static_cast<double>(next - 1) * log10_abs_w + static_cast<double>(next) * log10_sec;
    if (bound < target) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ConvergenceError("Stirling series for Gamma did not converge");

  BigComplex out = exp(sum);
  if (shift > 0) {
    BigComplex denom = s;
    for (long k = 1; k < shift; ++k) denom *= s + BigComplex(to_big(k));
    out /= denom;
  }
  return out;
}

BigReal gamma(const BigReal& s) { return gamma(BigComplex(s, BigReal(0))).re(); }

}  // namespace detail

BigComplex gamma_complex(const BigComplex& s, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  BigComplex z = detail::gamma(promote(s));
  return z;
}

}  // namespace lamzeta
