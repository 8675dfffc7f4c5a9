#include "numerics/constants.hpp"

#include "numerics/bernoulli.hpp"
#include "numerics/error.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace lamzeta {
namespace detail {

// gamma = H_M - ln M - 1/(2M) + sum_{k>=1} B_{2k} / (2k M^{2k}), remainder
// below the first omitted term.
BigReal euler_gamma() {
  static std::mutex mutex;
  static std::map<unsigned, BigReal> cache;
  const unsigned digits = current_digits();
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(digits);
    if (it != cache.end()) return it->second;
  }
  const std::int64_t cut = static_cast<std::int64_t>(std::ceil(0.6 * digits)) + 10;
  BigReal harmonic = 0;
  for (std::int64_t n = cut; n >= 1; --n) harmonic += BigReal(1) / to_big(n);
  const BigReal big_cut = to_big(cut);
  BigReal value = harmonic - boost::multiprecision::log(big_cut) - 1 / (2 * big_cut);
  const BigReal inv2 = 1 / (big_cut * big_cut);
  BigReal power = inv2;
  const double target = -static_cast<double>(digits) - 3.0;
  bool converged = false;
  for (unsigned k = 1; k < 4 * digits + 50; ++k) {
    BigReal term = to_big(bernoulli(2 * k) / Rational(2 * k)) * power;
    value += term;
    power *= inv2;
    const BigReal next = to_big(bernoulli(2 * k + 2) / Rational(2 * k + 2)) * power;
    if (log10_abs(next) < target) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ConvergenceError("Euler's constant expansion did not converge");
  std::lock_guard lock(mutex);
  cache.emplace(digits, value);
  return value;
}

BigComplex root_of_unity(std::int64_t j, std::int64_t denom) {
  if (denom < 1) throw DomainError("root_of_unity needs a positive denominator");
  // Reduce the angle j/denom (in units of pi) to [0, 2).
  const std::int64_t g = std::gcd(j < 0 ? -j : j, denom);
  std::int64_t num = (g == 0) ? 0 : j / g;
  std::int64_t den = (g == 0) ? 1 : denom / g;
  num %= 2 * den;
  if (num < 0) num += 2 * den;

  if (den == 1 || den == 2 || den == 3 || den == 4 || den == 6) {
    // Work in twelfths of pi (or eighths for den 4).
    const BigReal half = BigReal(1) / 2;
    const BigReal r2 = boost::multiprecision::sqrt(BigReal(2)) / 2;
    const BigReal r3 = boost::multiprecision::sqrt(BigReal(3)) / 2;
    if (den == 4) {
      // num in {1,3,5,7}
      const BigReal c = (num == 1 || num == 7) ? r2 : BigReal(-r2);
      const BigReal s = (num == 1 || num == 3) ? r2 : BigReal(-r2);
      return BigComplex(c, s);
    }
    const std::int64_t sixths = num * (6 / den);  // angle = sixths * pi / 6
    BigReal c;
    BigReal s;
    switch (sixths) {
      case 0: c = 1; s = 0; break;
      case 1: c = r3; s = half; break;
      case 2: c = half; s = r3; break;
      case 3: c = 0; s = 1; break;
      case 4: c = -half; s = r3; break;
      case 5: c = -r3; s = half; break;
      case 6: c = -1; s = 0; break;
      case 7: c = -r3; s = -half; break;
      case 8: c = -half; s = -r3; break;
      case 9: c = 0; s = -1; break;
      case 10: c = half; s = -r3; break;
      default: c = r3; s = -half; break;
    }
    return BigComplex(c, s);
  }
  const unsigned digits = current_digits();
  BigReal c;
  BigReal s;
  {
    PrecisionScope wide(static_cast<int>(2 * digits));
    const BigReal theta = pi_value() * to_big(num) / to_big(den);
    sin_cos(theta, s, c);
  }
  return BigComplex(BigReal(c, digits), BigReal(s, digits));
}

}  // namespace detail

BigReal euler_gamma(const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  return detail::euler_gamma();
}

BigComplex root_of_unity(std::int64_t j, std::int64_t denom, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  return detail::root_of_unity(j, denom);
}

}  // namespace lamzeta
