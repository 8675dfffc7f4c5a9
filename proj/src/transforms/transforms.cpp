#include "transforms/transforms.hpp"

#include "numerics/bernoulli.hpp"
#include "numerics/constants.hpp"
#include "numerics/error.hpp"
#include "numerics/zeta.hpp"

#include <cmath>

namespace lamzeta {
namespace {

constexpr double kLn10 = 2.302585092994045684;

BigReal pow_int(const BigReal& b, long e) {
  BigReal out;
  mpfr_pow_si(out.backend().data(), b.backend().data(), e, MPFR_RNDN);
  return out;
}

BigReal A_of(const BigReal& y, unsigned N) {
  const BigReal pi = pi_value();
  return pi * root_n(2 * pi * y, N);
}

// Angles u_j = pi * num_j / (2N) used by S(x), listed with both signs so the
// complex sum is real up to rounding.
std::vector<std::int64_t> kernel_numerators(unsigned N) {
  std::vector<std::int64_t> out;
  const std::int64_t n = N;
  if (N % 2 == 1) {
    out.push_back(0);
    for (std::int64_t j = 1; j <= (n - 1) / 2; ++j) {
      out.push_back(2 * j);
      out.push_back(-2 * j);
    }
  } else {
    for (std::int64_t j = 1; j <= n / 2; ++j) {
      out.push_back(2 * j - 1);
      out.push_back(-(2 * j - 1));
    }
  }
  return out;
}

BigComplex inverse_expm1(const BigComplex& z) {
  if (abs(z) < 1) return BigComplex(BigReal(1)) / expm1(z);
  const BigComplex e = exp(-z);
  return e / (BigComplex(BigReal(1)) - e);
}

}  // namespace

void TransformParams::validate() const {
  if (N < 1) throw DomainError("N must be at least 1");
  if (x <= 0) throw DomainError("x must be positive");
}

BigReal coeff_A(const BigReal& y, unsigned N, const PrecisionContext& ctx) {
  ctx.validate();
  if (N < 1) throw DomainError("N must be at least 1");
  if (y <= 0) throw DomainError("A_N(y) needs y > 0");
  PrecisionScope scope(ctx);
  return A_of(promote(y), N);
}

CosSin coeff_ab(std::int64_t j, unsigned N, const PrecisionContext& ctx) {
  ctx.validate();
  if (N < 1) throw DomainError("N must be at least 1");
  if (j < 0 || j > static_cast<std::int64_t>(N)) throw DomainError("coeff_ab needs 0 <= j <= N");
  PrecisionScope scope(ctx);
  const BigComplex z = detail::root_of_unity(j, 2 * static_cast<std::int64_t>(N));
  return {z.re(), z.im()};
}

BigReal kernel_f0(const BigReal& x, std::uint64_t n, unsigned N, const PrecisionContext& ctx) {
  ctx.validate();
  if (x <= 0 || n < 1 || N < 1) throw DomainError("kernel_f0 needs x > 0, n >= 1, N >= 1");
  PrecisionScope scope(ctx);
  const BigReal A = A_of(BigReal(n) / promote(x), N);
  return 1 / expm1(2 * A);
}

BigReal kernel_trig_form(const KernelPoint& p) {
  BigReal sin_u, cos_u;
  sin_cos(p.u, sin_u, cos_u);
  const BigReal uv = p.u * p.v;
  const BigReal num = boost::multiprecision::cos(p.a * sin_u + uv) -
                      boost::multiprecision::exp(-p.a * cos_u) * boost::multiprecision::cos(uv);
  const BigReal den = boost::multiprecision::cosh(p.a * cos_u) - boost::multiprecision::cos(p.a * sin_u);
  if (den == 0) throw DomainError("kernel denominator vanished");
  return num / den;
}

BigReal kernel_exp_form(const KernelPoint& p) {
  const BigComplex phase = polar_unit(p.u * p.v);
  const BigComplex rot = polar_unit(-p.u);
  return 2 * (phase * inverse_expm1(rot * p.a)).re();
}

namespace {

KernelPoint kernel_point(const BigReal& x, std::uint64_t n, unsigned N, std::int64_t h, std::int64_t j) {
  const BigReal pi = pi_value();
  return {2 * A_of(BigReal(n) / x, N), pi * to_big(j) / to_big(2 * static_cast<std::int64_t>(N)),
          to_big(2 * h - 1)};
}

void check_fj(const BigReal& x, std::uint64_t n, unsigned N, std::int64_t j) {
  if (x <= 0 || n < 1 || N < 1) throw DomainError("kernel_fj needs x > 0, n >= 1, N >= 1");
  if (j < 1) throw DomainError("kernel_fj needs j >= 1");
}

}  // namespace

BigReal kernel_fj(const BigReal& x, std::uint64_t n, unsigned N, std::int64_t h, std::int64_t j,
                  const PrecisionContext& ctx) {
  ctx.validate();
  check_fj(x, n, N, j);
  PrecisionScope scope(ctx);
  const BigReal a = 2 * A_of(BigReal(n) / promote(x), N);
  // Exact phases where the angle allows it.
  const std::int64_t den = 2 * static_cast<std::int64_t>(N);
  const BigComplex phase = detail::root_of_unity(j * (2 * h - 1), den);
  const BigComplex rot = detail::root_of_unity(-j, den);
  return 2 * (phase * inverse_expm1(rot * a)).re();
}

BigReal kernel_fj_trig(const BigReal& x, std::uint64_t n, unsigned N, std::int64_t h, std::int64_t j,
                       const PrecisionContext& ctx) {
  ctx.validate();
  check_fj(x, n, N, j);
  PrecisionScope scope(ctx);
  return kernel_trig_form(kernel_point(promote(x), n, N, h, j));
}

std::vector<PiMonomial> p1_correction_terms(unsigned N, std::int64_t h) {
  std::vector<PiMonomial> out;
  const std::int64_t n = N;
  const std::int64_t upper = h >= 0 ? h / n : -((-h + n - 1) / n);
  // (-1)^{h+1} 2^{2h-1} pi^{2h} (-1/(4 pi^2))^{jN} B_{2j} B_{2h-2jN} x^{2j-1} / ((2j)! (2h-2jN)!)
  for (std::int64_t j = 1; j <= upper; ++j) {
    const std::int64_t b_index = 2 * h - 2 * j * n;
    Rational c = bernoulli_over_factorial(static_cast<unsigned>(2 * j)) *
                 bernoulli_over_factorial(static_cast<unsigned>(b_index));
    if (c == 0) continue;
    // 2^{2h-1} / 4^{jN} = 2^{2h-1-2jN}
    const std::int64_t two_power = 2 * h - 1 - 2 * j * n;
    const BigInt two = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(std::abs(two_power)));
    c = two_power >= 0 ? Rational(c * Rational(two)) : Rational(c / Rational(two));
    const bool negative = ((h + 1) % 2 != 0) != ((j * n) % 2 != 0);
    if (negative) c = -c;
    out.push_back({c, b_index, 2 * j - 1});
  }
  return out;
}

namespace detail {

BigReal evaluate(const std::vector<PiMonomial>& terms, const BigReal& x) {
  const BigReal pi = pi_value();
  BigReal total = 0;
  for (const auto& t : terms) total += to_big(t.coeff) * pow_int(pi, static_cast<long>(t.pi_power)) * pow_int(x, static_cast<long>(t.x_power));
  return total;
}

BigReal poly_P(const TransformParams& params) {
  params.validate();
  if (params.is_log_case()) throw DomainError("P(x) is not defined for N - 2h = -1");
  const std::int64_t n = params.N;
  const std::int64_t h = params.h;
  const BigReal& x = params.x;

  const BigReal first = -zeta(Rational(2 * h - n)) / 2;

  BigReal second;
  if (h == 0) {
    second = BigReal(-0.5) / x;
  } else if (h > 0) {
    second = to_big(zeta_even_coefficient(static_cast<unsigned>(h))) * pow_int(pi_value(), static_cast<long>(2 * h)) / x;
  } else {
    second = 0;
  }

  const Rational s0(n - 2 * h + 1, n);
  const BigReal third = gamma_zeta_product(s0) * pow_rational(x, -s0) / to_big(n);
  return first + second + third;
}

BigReal poly_P1(const TransformParams& params) {
  return poly_P(params) + evaluate(p1_correction_terms(params.N, params.h), params.x);
}

SeriesSResult series_S(const TransformParams& params, const PrecisionContext& ctx) {
  params.validate();
  const unsigned N = params.N;
  const std::int64_t h = params.h;
  const BigReal pi = pi_value();
  const std::int64_t den = 2 * static_cast<std::int64_t>(N);

  // a(n) = 2 A_N(n/x) = c n^{1/N}
  const BigReal c = 2 * pi * root_n(2 * pi / params.x, N);
  const std::vector<std::int64_t> nums = kernel_numerators(N);
  std::vector<BigComplex> phases;
  std::vector<BigComplex> rotations;
  std::int64_t widest = 0;
  for (std::int64_t k : nums) {
    phases.push_back(detail::root_of_unity(k * (2 * h - 1), den));
    rotations.push_back(detail::root_of_unity(-k, den));
    widest = std::max<std::int64_t>(widest, std::abs(k));
  }
  const long weight = -static_cast<long>(2 * h - 1);  // n^{-(2h-1)/N} = (n^{1/N})^{weight}

  auto bracket = [&](std::uint64_t n) {
    const BigReal root = root_n(BigReal(n), N);
    const BigReal a = c * root;
    BigComplex acc;
    for (std::size_t i = 0; i < nums.size(); ++i) acc += phases[i] * inverse_expm1(rotations[i] * a);
    if (weight != 0) acc *= pow_int(root, weight);
    return acc;
  };

  // Every piece is at most 2 e^{-a cos u} once a cos u >= ln 2; the slowest
  // decay comes from the widest angle in use.
  const double cos_min = std::cos(M_PI * static_cast<double>(widest) / static_cast<double>(den));
  DecayProfile profile;
  profile.log_coeff = std::log(2.0 * static_cast<double>(nums.size()));
  profile.power = static_cast<double>(weight) / N;
  profile.rate = c.convert_to<double>() * cos_min;
  profile.exponent = 1.0 / N;
  profile.n_valid = std::pow(std::log(2.0) / profile.rate, static_cast<double>(N));

  BigComplex sum = bracket(1);
  double log_size = log10_abs(abs(sum)) * kLn10;
  TruncationEstimate est = plan_truncation(profile, log_size, ctx, "S(x) series");
  std::uint64_t done = 1;
  for (;;) {
    for (std::uint64_t n = done + 1; n <= est.n_max; ++n) sum += bracket(n);
    done = std::max<std::uint64_t>(done, est.n_max);
    const double actual = log10_abs(abs(sum)) * kLn10;
    if (est.reduced || actual >= log_size - kLn10) break;
    log_size = actual;
    TruncationEstimate again = plan_truncation(profile, log_size, ctx, "S(x) series");
    if (again.n_max <= done) break;
    est = again;
  }
  est.n_max = done;

  const Rational s0(static_cast<std::int64_t>(N) - 2 * h + 1, static_cast<std::int64_t>(N));
  BigReal prefactor = pow_rational(2 * pi / params.x, s0) / to_big(static_cast<std::int64_t>(N));
  if ((h + 1) % 2 != 0) prefactor = -prefactor;
  SeriesSResult out;
  out.value = prefactor * sum.re();
  out.imag_residual = prefactor * sum.im();
  // Tail bound is relative to the bracket sum; rescale to S.
  est.tail_bound *= boost::multiprecision::abs(prefactor);
  out.truncation = est;
  return out;
}

}  // namespace detail

BigReal poly_P(const TransformParams& params, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  return detail::poly_P(TransformParams{params.N, params.h, promote(params.x)});
}

BigReal poly_P1(const TransformParams& params, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  return detail::poly_P1(TransformParams{params.N, params.h, promote(params.x)});
}

SeriesSResult series_S(const TransformParams& params, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  return detail::series_S(TransformParams{params.N, params.h, promote(params.x)}, ctx);
}

}  // namespace lamzeta
