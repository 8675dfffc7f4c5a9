#include "lambert/lambert.hpp"

#include "lambert/tail.hpp"
#include "numerics/constants.hpp"
#include "numerics/error.hpp"

#include <cmath>
#include <string>

namespace lamzeta {
namespace {

constexpr double kLn10 = 2.302585092994045684;

// n^q for a positive integer n and rational q.
BigReal int_power(std::uint64_t n, const Rational& q, unsigned long root, bool integral, long whole) {
  const BigReal big_n(n);
  if (integral) {
    BigReal out;
    mpfr_pow_si(out.backend().data(), big_n.backend().data(), whole, MPFR_RNDN);
    return out;
  }
  if (root != 0) {
    const BigReal base = root_n(big_n, root);
    if (whole == 1) return base;
    BigReal out;
    mpfr_pow_si(out.backend().data(), base.backend().data(), whole, MPFR_RNDN);
    return out;
  }
  return pow_rational(big_n, q);
}

// Precomputed shape of n -> n^q.
struct PowerPlan {
  Rational q;
  bool integral = false;
  long whole = 0;           // numerator when integral or for the root path
  unsigned long root = 0;   // denominator if small enough for mpfr_rootn_ui

  explicit PowerPlan(const Rational& exponent) : q(exponent) {
    const BigInt num = boost::multiprecision::numerator(exponent);
    const BigInt den = boost::multiprecision::denominator(exponent);
    if (den == 1 && boost::multiprecision::abs(num) < 1'000'000) {
      integral = true;
      whole = num.convert_to<long>();
    } else if (den < 1'000'000 && boost::multiprecision::abs(num) < 1'000'000) {
      root = den.convert_to<unsigned long>();
      whole = num.convert_to<long>();
    }
  }

  BigReal operator()(std::uint64_t n) const { return int_power(n, q, root, integral, whole); }
};

// 1 / (e^z - 1) for Re z > 0.
BigComplex inverse_expm1(const BigComplex& z) {
  if (z.is_real()) {
    const BigReal& a = z.re();
    if (a < 1) return BigComplex(1 / expm1(a));
    const BigReal e = boost::multiprecision::exp(-a);
    return BigComplex(e / (1 - e));
  }
  if (abs(z) < 1) return BigComplex(BigReal(1)) / expm1(z);
  const BigComplex e = exp(-z);
  return e / (BigComplex(BigReal(1)) - e);
}

BigComplex term(const SeriesSpec& spec, const PowerPlan& num_power, const PowerPlan& inner_power,
                std::uint64_t n) {
  const BigReal inner = inner_power(n);
  BigComplex z = spec.x * inner;
  BigComplex t = inverse_expm1(z);
  if (spec.r != 0) t *= num_power(n);
  return t;
}

DecayProfile profile_for(const SeriesSpec& spec) {
  DecayProfile p;
  p.log_coeff = std::log(2.0);
  p.power = spec.r.convert_to<double>();
  p.rate = spec.x.re().convert_to<double>();
  p.exponent = spec.s.convert_to<double>();
  p.n_valid = std::pow(std::log(2.0) / p.rate, 1.0 / p.exponent);
  return p;
}

TruncationEstimate estimate_with_scale(const SeriesSpec& spec, const PrecisionContext& ctx, double log_size) {
  return plan_truncation(profile_for(spec), log_size, ctx, "Lambert series");
}

double first_term_log_size(const SeriesSpec& spec) {
  const BigComplex t = term(spec, PowerPlan(spec.r), PowerPlan(spec.s), 1);
  return log10_abs(abs(t)) * kLn10;
}

}  // namespace

void SeriesSpec::validate() const {
  if (s <= 0) throw DomainError("Lambert series needs s > 0");
  if (x.re() <= 0) throw DomainError("Lambert series needs Re(x) > 0");
}

TruncationEstimate truncation_bound(const SeriesSpec& spec, const PrecisionContext& ctx) {
  ctx.validate();
  spec.validate();
  PrecisionScope scope(ctx);
  SeriesSpec local{spec.r, spec.s, promote(spec.x)};
  return estimate_with_scale(local, ctx, first_term_log_size(local));
}

namespace detail {

LambertResult lambert_sum(const SeriesSpec& spec, const PrecisionContext& ctx) {
  spec.validate();
  const PowerPlan num_power(spec.r);
  const PowerPlan inner_power(spec.s);
  double log_size = first_term_log_size(spec);
  TruncationEstimate est = estimate_with_scale(spec, ctx, log_size);

  BigComplex sum;
  std::uint64_t done = 0;
  for (;;) {
    for (std::uint64_t n = done + 1; n <= est.n_max; ++n) sum += term(spec, num_power, inner_power, n);
    done = est.n_max;
    // The first term only estimates the size of the sum; if the sum came out
    // much smaller, tighten the cut-off against the real size.
    const double actual = log10_abs(abs(sum)) * kLn10;
    if (est.reduced || actual >= log_size - kLn10) break;
    log_size = actual;
    TruncationEstimate again = estimate_with_scale(spec, ctx, log_size);
    if (again.n_max <= done) break;
    est = again;
  }
  est.n_max = done;
  return {sum, est};
}

LambertResult lambert_sum_rotated(const Rational& r, unsigned N, const BigReal& beta, Angle theta,
                                  const PrecisionContext& ctx) {
  if (N == 0) throw DomainError("rotated Lambert series needs N >= 1");
  const BigComplex unit = detail::root_of_unity(theta.num, theta.den);
  if (unit.re() <= 0) {
    throw DomainError("rotation pi*" + std::to_string(theta.num) + "/" + std::to_string(theta.den) +
                      " has non-positive cosine; the series diverges");
  }
  const BigReal scale = root_n(BigReal(2), N) * beta;
  SeriesSpec spec{r, Rational(1, N), unit * scale};
  return detail::lambert_sum(spec, ctx);
}

}  // namespace detail

LambertResult lambert_sum(const SeriesSpec& spec, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  return detail::lambert_sum(SeriesSpec{spec.r, spec.s, promote(spec.x)}, ctx);
}

LambertResult lambert_sum_rotated(const Rational& r, unsigned N, const BigReal& beta, Angle theta,
                                  const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  return detail::lambert_sum_rotated(r, N, promote(beta), theta, ctx);
}

LambertResult lambert_sum_rotated(const Rational& r, unsigned N, const BigReal& beta, std::int64_t j,
                                  const PrecisionContext& ctx) {
  return lambert_sum_rotated(r, N, beta, Angle{j, static_cast<std::int64_t>(N)}, ctx);
}

}  // namespace lamzeta
