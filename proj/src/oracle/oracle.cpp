#include "oracle/oracle.hpp"

#include "identities/builder.hpp"
#include "lambert/lambert.hpp"
#include "lambert/tail.hpp"
#include "numerics/bernoulli.hpp"
#include "numerics/error.hpp"
#include "numerics/gamma.hpp"
#include "numerics/zeta.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace lamzeta {
namespace {

constexpr unsigned kMaxQuadPoints = 512;

// |Gamma(c0+it) zeta(c0+it) zeta(N(c0+it) - (N-2h)) x^{-c0-it}| / pi on t >= max(1, c0^2),
// bounded by 2 sqrt(2 pi) t^{c0-1/2} e^{-pi t/2} zeta(c0) zeta(sigma2) x^{-c0} / pi.
DecayProfile stirling_profile(const BigReal& c0, unsigned N, std::int64_t h, const BigReal& x) {
  const double c = c0.convert_to<double>();
  const double z1 = std::log(detail::zeta(c0).convert_to<double>());
  const double z2 = std::log(detail::zeta(BigReal(N * c0 - (static_cast<std::int64_t>(N) - 2 * h))).convert_to<double>());
  DecayProfile p;
  p.log_coeff = std::log(2.0 * std::sqrt(2.0 * M_PI) / M_PI) + z1 + z2 - c * std::log(x.convert_to<double>());
  p.power = c - 0.5;
  p.rate = M_PI / 2;
  p.exponent = 1;
  p.n_valid = std::max(1.0, c * c);
  return p;
}

double log_integrand_scale(const BigReal& c0, unsigned N, std::int64_t h, const BigReal& x) {
  const BigReal s2 = N * c0 - (static_cast<std::int64_t>(N) - 2 * h);
  const BigReal v = detail::gamma(c0) * detail::zeta(c0) * detail::zeta(s2) * boost::multiprecision::pow(x, -c0);
  return std::log(v.convert_to<double>());
}

BigReal integrand(const BigReal& c0, const BigReal& t, unsigned N, std::int64_t h, const BigReal& log_x) {
  const BigComplex s(c0, t);
  const BigComplex s2(N * c0 - (static_cast<std::int64_t>(N) - 2 * h), N * t);
  const BigComplex xs = exp(BigComplex(-c0 * log_x, -t * log_x));
  return (detail::gamma(s) * detail::zeta(s) * detail::zeta(s2) * xs).re();
}

std::vector<std::pair<BigReal, BigReal>> panels(const BigReal& t_max) {
  std::vector<std::pair<BigReal, BigReal>> out;
  BigReal a = 0;
  while (a < t_max) {
    const BigReal width = a < 4 ? BigReal(0.5) : BigReal(1);
    BigReal b = a + width;
    if (b > t_max) b = t_max;
    out.emplace_back(a, b);
    a = b;
  }
  return out;
}

BigReal integrate(const std::vector<std::pair<BigReal, BigReal>>& parts, unsigned points, const BigReal& c0,
                  unsigned N, std::int64_t h, const BigReal& log_x) {
  const GaussRule rule = gauss_legendre(points);
  BigReal total = 0;
  for (const auto& [a, b] : parts) {
    const BigReal mid = (a + b) / 2;
    const BigReal half = (b - a) / 2;
    BigReal panel = 0;
    for (unsigned i = 0; i < points; ++i) {
      panel += rule.weights[i] * integrand(c0, mid + half * rule.nodes[i], N, h, log_x);
    }
    total += half * panel;
  }
  return total / pi_value();
}

}  // namespace

GaussRule gauss_legendre(unsigned points) {
  if (points == 0) throw ConvergenceError("quadrature rule with no nodes");
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, GaussRule> cache;
  const unsigned digits = current_digits();
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({points, digits});
    if (it != cache.end()) return it->second;
  }
  GaussRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  const BigReal eps = boost::multiprecision::pow(BigReal(10), -static_cast<int>(digits) + 2);
  const BigReal pi = pi_value();
  for (unsigned i = 0; i < (points + 1) / 2; ++i) {
    BigReal z = boost::multiprecision::cos(pi * (BigReal(i) + BigReal(0.75)) / (BigReal(points) + BigReal(0.5)));
    BigReal deriv;
    for (int iter = 0; iter < 100; ++iter) {
      BigReal p0 = 1;
      BigReal p1 = z;
      for (unsigned k = 2; k <= points; ++k) {
        BigReal p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      // p1 = P_n(z), p0 = P_{n-1}(z)
      deriv = points * (z * p1 - p0) / (z * z - 1);
      const BigReal step = p1 / deriv;
      z -= step;
      if (boost::multiprecision::abs(step) < eps) break;
    }
    rule.nodes[i] = z;
    rule.nodes[points - 1 - i] = -z;
    const BigReal w = 2 / ((1 - z * z) * deriv * deriv);
    rule.weights[i] = w;
    rule.weights[points - 1 - i] = w;
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(std::make_pair(points, digits), rule);
  return rule;
}

Rational contour_abscissa_floor(unsigned N, std::int64_t h) {
  if (N == 0) throw DomainError("N must be positive");
  const Rational edge = Rational(static_cast<std::int64_t>(N) - 2 * h + 1) / N;
  return edge > 1 ? edge : Rational(1);
}

ContourSpec default_contour(unsigned N, std::int64_t h, const BigReal& x, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  if (!(x > 0)) throw DomainError("x must be positive");
  ContourSpec spec;
  spec.c0 = to_big(contour_abscissa_floor(N, h) + Rational(1, 2));
  const DecayProfile profile = stirling_profile(spec.c0, N, h, promote(x));
  const double log_target = log_integrand_scale(spec.c0, N, h, promote(x)) - (ctx.decimal_digits + 3) * std::log(10.0);
  const std::uint64_t cut = smallest_cutoff(profile, log_target);
  if (cut == 0) throw ConvergenceError("no finite contour height reaches the target");
  spec.t_max = to_big(static_cast<std::int64_t>(std::max<std::uint64_t>(cut, 4)));
  return spec;
}

MellinResult mellin_integral(unsigned N, std::int64_t h, const BigReal& x_in, const ContourSpec& spec,
                             const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx);
  const BigReal x = promote(x_in);
  const BigReal c0 = promote(spec.c0);
  const BigReal t_max = promote(spec.t_max);
  if (!(x > 0)) throw DomainError("x must be positive");
  if (!(c0 > to_big(contour_abscissa_floor(N, h)))) {
    throw DomainError("contour abscissa must exceed " + contour_abscissa_floor(N, h).str());
  }
  if (spec.quad_points == 0) throw ConvergenceError("quadrature rule with no nodes");
  if (!(t_max > BigReal(0.05))) throw ConvergenceError("contour height " + to_decimal(t_max, 3) + " leaves no usable nodes");

  const BigReal log_x = boost::multiprecision::log(x);
  const auto parts = panels(t_max);
  MellinResult out;
  out.panels = static_cast<unsigned>(parts.size());
  unsigned q = spec.quad_points;
  BigReal previous = integrate(parts, q, c0, N, h, log_x);
  while (true) {
    if (2 * q > kMaxQuadPoints) {
      throw ConvergenceError("quadrature did not settle with " + std::to_string(q) + " nodes per panel");
    }
    q *= 2;
    const BigReal current = integrate(parts, q, c0, N, h, log_x);
    const BigReal diff = boost::multiprecision::abs(current - previous);
    const BigReal tol = boost::multiprecision::abs(current) * boost::multiprecision::pow(BigReal(10), -ctx.decimal_digits);
    previous = current;
    if (diff <= tol) {
      out.value = current;
      out.quad_error = diff;
      out.quad_points = q;
      break;
    }
  }

  const DecayProfile profile = stirling_profile(c0, N, h, x);
  const double log_tail = log_tail_bound(profile, t_max.convert_to<double>());
  const double log_target = std::log(boost::multiprecision::abs(out.value).convert_to<double>()) -
                            ctx.decimal_digits * std::log(10.0);
  if (!(log_tail <= log_target)) {
    const std::uint64_t needed = smallest_cutoff(profile, log_target);
    throw ConvergenceError("contour tail beyond t_max = " + to_decimal(t_max, 4) +
                           " exceeds the target; t_max >= " + std::to_string(needed) + " is needed");
  }
  out.tail_bound = boost::multiprecision::exp(BigReal(log_tail));
  return out;
}

int oracle_target_digits(const PrecisionContext& ctx) { return std::max(1, ctx.decimal_digits - 5); }

OracleComparison oracle_compare(unsigned N, std::int64_t h, const BigReal& x, const PrecisionContext& ctx,
                                const ContourSpec* contour) {
  ctx.validate();
  PrecisionScope scope(ctx);
  OracleComparison out;
  const ContourSpec spec = contour ? *contour : default_contour(N, h, x, ctx);
  out.detail = mellin_integral(N, h, x, spec, ctx);
  out.mellin = out.detail.value;
  const LambertResult direct =
      detail::lambert_sum(SeriesSpec{Rational(static_cast<std::int64_t>(N) - 2 * h), Rational(N), promote(x)}, ctx);
  out.lambert = direct.value.re();
  out.lambert_terms = direct.truncation.n_max;
  out.abs_diff = boost::multiprecision::abs(out.lambert - out.mellin);
  const BigReal scale = boost::multiprecision::max(boost::multiprecision::abs(out.lambert), boost::multiprecision::abs(out.mellin));
  if (out.abs_diff == 0) {
    out.digits_agreed = ctx.working_digits();
  } else {
    const double d = std::floor(-log10_abs(out.abs_diff / scale));
    out.digits_agreed = static_cast<int>(std::clamp(d, 0.0, static_cast<double>(ctx.working_digits())));
  }
  out.target_digits = oracle_target_digits(ctx);
  out.achieved = out.digits_agreed >= out.target_digits;
  return out;
}

Rational divisor_sigma(std::int64_t k, std::uint64_t n) {
  if (n == 0) throw DomainError("divisor_sigma needs n >= 1");
  auto power = [k](std::uint64_t d) {
    const Rational base{BigInt(d)};
    Rational p = 1;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) p *= base;
    return k < 0 ? Rational(1 / p) : p;
  };
  Rational total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += power(d);
    if (d != n / d) total += power(n / d);
  }
  return total;
}

std::vector<ResidueTerm> cn_residues(std::int64_t m) {
  if (m < 1) throw ConstraintError("m must be at least 1");
  const auto two_pow = [](std::int64_t e) { return Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(e))); };
  const int sm = detail::sign_pow(m);
  std::vector<ResidueTerm> out;
  out.push_back({-2 * m, Rational(sm) / two_pow(2 * m + 1), 1, -2 * m, 2 * m});
  out.push_back({0, Rational(-1, 2), 1, 0, 0});
  const unsigned top = static_cast<unsigned>(2 * m + 2);
  out.push_back({1, sm * two_pow(2 * m + 2) * bernoulli(top) / Rational(2 * factorial(top)), 0, 2 * m + 2, -1});
  for (std::int64_t i = 0; i <= m; ++i) {
    const unsigned a = static_cast<unsigned>(2 * i + 2);
    const unsigned b = static_cast<unsigned>(2 * m - 2 * i);
    const Rational c = -sm * detail::sign_pow(i) * bernoulli(a) * bernoulli(b) * two_pow(2 * m - 2 * i) /
                       Rational(2 * factorial(a) * factorial(b));
    out.push_back({-(2 * i + 1), c, 0, 2 * m - 2 * i, 2 * i + 1});
  }
  return out;
}

namespace {

// sum sigma_{-(2m+1)}(n) e^{-n rate}; sigma_{-(2m+1)}(n) <= zeta(3) < 2.
BigReal divisor_series(std::int64_t m, const BigReal& rate, detail::ReportBuilder& b, const std::string& key) {
  const DecayProfile profile{std::log(2.0), 0, rate.convert_to<double>(), 1, 1};
  const TruncationEstimate plan = plan_truncation(profile, -rate.convert_to<double>(), b.ctx(), key);
  b.record_truncation(key, plan);
  BigReal total = 0;
  const BigReal step = boost::multiprecision::exp(-rate);
  BigReal weight = 1;
  for (std::uint64_t n = 1; n <= plan.n_max; ++n) {
    weight *= step;
    total += to_big(divisor_sigma(-(2 * m + 1), n)) * weight;
  }
  return total;
}

IdentityReport cn_report(IdentityId id, std::int64_t m, const BigReal& y_in, const PrecisionContext& ctx) {
  if (m < 1) throw ConstraintError("m must be at least 1");
  detail::ReportBuilder b(id, ctx);
  const BigReal y = promote(y_in);
  if (!(y > 0)) throw ConstraintError("y must be positive");
  b.param("m", m);
  b.param("y", y);

  const BigReal pi = pi_value();
  const BigReal direct = divisor_series(m, y, b, "direct");
  const BigReal dual = divisor_series(m, 4 * pi * pi / y, b, "dual");
  // V(m) = (-1)^{m+1} (y/2pi)^{2m} sum sigma e^{-4 pi^2 n/y}
  const BigReal v = -detail::sign_pow(m) * boost::multiprecision::pow(y / (2 * pi), 2 * m) * dual;
  const BigReal z = detail::zeta_at(2 * m + 1);

  b.lhs().add(direct);
  if (id == IdentityId::CnCorrected) {
    b.lhs().add(v);
    for (const auto& r : cn_residues(m)) {
      BigReal term = to_big(r.coeff) * boost::multiprecision::pow(pi, r.pi_power) * boost::multiprecision::pow(y, r.y_power);
      if (r.zeta_power == 1) term *= z;
      b.rhs().add(term);
    }
  } else {
    b.rhs().sub(v);
    b.rhs().add(-z / 2);
  }
  return b.finish();
}

}  // namespace

IdentityReport cn_corrected(std::int64_t m, const BigReal& y, const PrecisionContext& ctx) {
  return cn_report(IdentityId::CnCorrected, m, y, ctx);
}

IdentityReport cn_erroneous_demo(std::int64_t m, const BigReal& y, const PrecisionContext& ctx) {
  return cn_report(IdentityId::CnErroneous, m, y, ctx);
}

}  // namespace lamzeta
