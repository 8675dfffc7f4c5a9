#include "identities/identities.hpp"

#include "identities/builder.hpp"
#include "lambert/lambert.hpp"
#include "numerics/bernoulli.hpp"
#include "numerics/constants.hpp"
#include "numerics/error.hpp"
#include "numerics/gamma.hpp"
#include "numerics/zeta.hpp"
#include "transforms/transforms.hpp"

#include <cmath>
#include <map>

namespace lamzeta {

using detail::ReportBuilder;
using detail::sign_pow;
using detail::zeta_at;

namespace {

BigReal rpow(const BigReal& base, const Rational& e) { return pow_rational(base, e); }

Rational bernoulli_pair(unsigned a, unsigned b) { return bernoulli_over_factorial(a) * bernoulli_over_factorial(b); }

void require_odd(unsigned N) {
  if (N == 0 || N % 2 == 0) throw ConstraintError("N must be odd");
}

void require_even(unsigned N) {
  if (N == 0 || N % 2 != 0) throw ConstraintError("N must be even");
}

void require_positive(const BigReal& v, const char* name) {
  if (!(v > 0)) throw ConstraintError(std::string(name) + " must be positive");
}

std::string angle_key(const char* base, std::int64_t num, std::int64_t den) {
  return std::string(base) + "[" + std::to_string(num) + "/" + std::to_string(den) + "]";
}

// sum over j of (-1)^j sum n^r / (exp((2n)^{1/N} beta e^{i pi j/N}) - 1), |j| <= (N-1)/2
BigComplex alternating_rotations(ReportBuilder& b, const char* key, const Rational& r, unsigned N,
                                 const BigReal& beta, std::vector<BigComplex>* parts = nullptr) {
  const std::int64_t half = (static_cast<std::int64_t>(N) - 1) / 2;
  BigComplex total;
  for (std::int64_t j = -half; j <= half; ++j) {
    BigComplex v = b.rotated(angle_key(key, j, N), r, N, beta, Angle{j, static_cast<std::int64_t>(N)});
    if (sign_pow(j) < 0) v = -v;
    if (parts) parts->push_back(v);
    total += v;
  }
  return total;
}

}  // namespace

BigReal PairConstraint::target() const { return to_big(coeff) * boost::multiprecision::pow(pi_value(), pi_power); }

BigReal PairConstraint::solve_beta(const BigReal& alpha) const {
  require_positive(alpha, "alpha");
  return root_n(target() / alpha, N);
}

BigReal PairConstraint::solve_alpha(const BigReal& beta) const {
  require_positive(beta, "beta");
  return target() / boost::multiprecision::pow(beta, N);
}

void PairConstraint::check(const BigReal& alpha, const BigReal& beta) const {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  const BigReal t = target();
  const BigReal rel = boost::multiprecision::abs(alpha * boost::multiprecision::pow(beta, N) - t) / t;
  const int digits = static_cast<int>(current_digits());
  if (rel > boost::multiprecision::pow(BigReal(10), -(digits - 5))) {
    throw ConstraintError("alpha and beta violate " + describe() + " (relative mismatch " + to_decimal(rel, 3) + ")");
  }
}

std::string PairConstraint::describe() const {
  std::string lhs = N == 1 ? "alpha*beta" : "alpha*beta^" + std::to_string(N);
  std::string rhs = (coeff == 1 ? "" : coeff.str()) + "pi^" + std::to_string(pi_power);
  return lhs + " = " + rhs;
}

PairConstraint constraint_for(IdentityId id, unsigned N) {
  switch (id) {
    case IdentityId::ZetaGen:
    case IdentityId::EtaGen:
    case IdentityId::WigertGen:
      return {N, 1, static_cast<std::int64_t>(N) + 1};
    case IdentityId::CorZ3Z7:
    case IdentityId::CorAbpi:
      return {3, 1, 4};
    case IdentityId::ZetaHalf:
      return {1, 4, 3};
    case IdentityId::RamanujanOdd:
    case IdentityId::RamSpl:
    case IdentityId::RamSpl0:
    case IdentityId::LogDedekind:
      return {1, 1, 2};
    default:
      throw UsageError("identity " + std::string(identity_cli_name(id)) + " has no alpha/beta constraint");
  }
}

IdentityReport verify_kty_extended(unsigned N, std::int64_t h, const BigReal& x, const PrecisionContext& ctx) {
  if (N == 0) throw ConstraintError("N must be positive");
  TransformParams tp{N, h, x};
  if (tp.is_log_case()) {
    // N - 2h = -1 is the logarithmic case, handled by the eta-type identity
    // with x = 2^N alpha.
    PrecisionScope scope(ctx);
    const BigReal alpha = promote(x) / boost::multiprecision::pow(BigReal(2), N);
    const PairConstraint c = constraint_for(IdentityId::EtaGen, N);
    IdentityReport r = verify_eta_gen(N, alpha, c.solve_beta(alpha), ctx);
    r.params["routed_from"] = "kty h=" + std::to_string(h) + " x=" + to_decimal(promote(x), 20);
    r.notes.push_back("N - 2h = -1: evaluated through the eta-type identity with alpha = x/2^N");
    return r;
  }
  ReportBuilder b(IdentityId::KtyExtended, ctx);
  require_positive(x, "x");
  tp.x = promote(x);
  b.param("N", N);
  b.param("h", h);
  b.param("x", tp.x);

  b.lhs().add(b.lambert("lhs", SeriesSpec{Rational(static_cast<std::int64_t>(N) - 2 * h), Rational(N), tp.x}));

  const std::vector<PiMonomial> corr = p1_correction_terms(N, h);
  b.rhs().add(detail::poly_P(tp));
  for (const auto& t : corr) b.rhs().add(detail::evaluate({t}, tp.x));
  const SeriesSResult s = detail::series_S(tp, b.ctx());
  b.record_truncation("S", s.truncation);
  b.rhs().add(BigComplex(s.value, s.imag_residual));
  return b.finish();
}

IdentityReport verify_zeta_gen(unsigned N, std::int64_t m, const BigReal& alpha_in, const BigReal& beta_in,
                               const PrecisionContext& ctx) {
  require_odd(N);
  if (m == 0) throw ConstraintError("m must be non-zero");
  ReportBuilder b(IdentityId::ZetaGen, ctx);
  const BigReal alpha = promote(alpha_in);
  const BigReal beta = promote(beta_in);
  constraint_for(IdentityId::ZetaGen, N).check(alpha, beta);
  b.param("N", N);
  b.param("m", m);
  b.param("alpha", alpha);
  b.param("beta", beta);

  const std::int64_t n = N;
  const Rational np1(n + 1);

  // alpha^{-2Nm/(N+1)} (zeta(2Nm+1)/2 + sum n^{-2Nm-1}/(exp((2n)^N alpha) - 1))
  const BigReal lhs_pref = rpow(alpha, Rational(-2 * n * m) / np1);
  const BigReal two_N = boost::multiprecision::pow(BigReal(2), N);
  b.lhs().add(lhs_pref * zeta_at(2 * n * m + 1) / 2);
  b.lhs().add(lhs_pref * b.lambert("lhs", SeriesSpec{Rational(-2 * n * m - 1), Rational(n), BigReal(two_N * alpha)}));

  // (-beta^{2N/(N+1)})^{-m} 2^{2m(N-1)}/N (zeta(2m+1)/2 + (-1)^{(N+3)/2} sum_j (-1)^j L_j)
  const BigReal rhs_pref = sign_pow(m) * rpow(beta, Rational(-2 * n * m) / np1) *
                           rpow(BigReal(2), Rational(2 * m * (n - 1))) / N;
  b.rhs().add(rhs_pref * zeta_at(2 * m + 1) / 2);
  std::vector<BigComplex> parts;
  alternating_rotations(b, "rot", Rational(-2 * m - 1), N, beta, &parts);
  const int rot_sign = sign_pow((n + 3) / 2);
  for (const auto& p : parts) b.rhs().add(rhs_pref * rot_sign * p);

  // (-1)^{m+(N+3)/2} 2^{2Nm} sum_j (-1)^j B_{2j} B_k/((2j)! k!) alpha^{2j/(N+1)} beta^{N+2N^2(m-j)/(N+1)}
  const std::int64_t top = floor_div(n + 1 + 2 * n * m, 2 * n);
  const BigReal block_pref = sign_pow(m + (n + 3) / 2) * rpow(BigReal(2), Rational(2 * n * m));
  for (std::int64_t j = 0; j <= top; ++j) {
    const std::int64_t k = n + 1 + 2 * n * (m - j);
    const Rational c = sign_pow(j) * bernoulli_pair(static_cast<unsigned>(2 * j), static_cast<unsigned>(k));
    if (c == 0) continue;
    b.rhs().add(block_pref * to_big(c) * rpow(alpha, Rational(2 * j) / np1) *
                rpow(beta, Rational(n) + Rational(2 * n * n * (m - j)) / np1));
  }
  return b.finish();
}

IdentityReport verify_eta_gen(unsigned N, const BigReal& alpha_in, const BigReal& beta_in,
                              const PrecisionContext& ctx) {
  require_odd(N);
  ReportBuilder b(IdentityId::EtaGen, ctx);
  const BigReal alpha = promote(alpha_in);
  const BigReal beta = promote(beta_in);
  constraint_for(IdentityId::EtaGen, N).check(alpha, beta);
  b.param("N", N);
  b.param("alpha", alpha);
  b.param("beta", beta);

  const std::int64_t n = N;
  const BigReal two_N = boost::multiprecision::pow(BigReal(2), N);
  b.lhs().add(b.lambert("lhs", SeriesSpec{Rational(-1), Rational(n), BigReal(two_N * alpha)}));
  std::vector<BigComplex> parts;
  alternating_rotations(b, "rot", Rational(-1), N, beta, &parts);
  const BigReal rot_pref = BigReal(-sign_pow((n + 3) / 2)) / N;
  for (const auto& p : parts) b.lhs().add(rot_pref * p);

  if (N > 1) b.rhs().add(BigReal(n - 1) * (ln2_value() - detail::euler_gamma()) / (2 * n));
  b.rhs().add(boost::multiprecision::log(alpha / beta) / (2 * (n + 1)));
  const std::int64_t top = floor_div(n + 1, 2 * n);
  const Rational np1(n + 1);
  for (std::int64_t j = 0; j <= top; ++j) {
    const std::int64_t k = n + 1 - 2 * n * j;
    const Rational c = sign_pow((n + 3) / 2 + j) *
                       bernoulli_pair(static_cast<unsigned>(2 * j), static_cast<unsigned>(k));
    if (c == 0) continue;
    b.rhs().add(to_big(c) * rpow(alpha, Rational(2 * j) / np1) *
                rpow(beta, Rational(n) - Rational(2 * n * n * j) / np1));
  }
  return b.finish();
}

IdentityReport verify_wigert_gen(unsigned N, std::int64_t m, const BigReal& alpha_in, const BigReal& beta_in,
                                 const PrecisionContext& ctx) {
  require_even(N);
  ReportBuilder b(IdentityId::WigertGen, ctx);
  const BigReal alpha = promote(alpha_in);
  const BigReal beta = promote(beta_in);
  constraint_for(IdentityId::WigertGen, N).check(alpha, beta);
  b.param("N", N);
  b.param("m", m);
  b.param("alpha", alpha);
  b.param("beta", beta);

  const std::int64_t n = N;
  const Rational np1(n + 1);
  const Rational expo = Rational(-(2 * n * m - 1)) / np1;
  const BigReal two_N = boost::multiprecision::pow(BigReal(2), N);

  const BigReal lhs_pref = rpow(alpha, expo);
  b.lhs().add(lhs_pref * zeta_at(2 * n * m) / 2);
  b.lhs().add(lhs_pref * b.lambert("lhs", SeriesSpec{Rational(-2 * n * m), Rational(n), BigReal(two_N * alpha)}));

  // beta^{-(2Nm-1)/(N+1)} (-1)^m/N 2^{(N-1)(2m-1/N)} ( zeta(2m+1-1/N)/(2cos(pi/2N)) - 2(-1)^{N/2} sum_j ... )
  const BigReal rhs_pref = rpow(beta, expo) * sign_pow(m) / N *
                           rpow(BigReal(2), Rational(n - 1) * (Rational(2 * m) - Rational(1, n)));
  const Rational zarg = Rational(2 * m + 1) - Rational(1, n);
  const BigReal cos_half = detail::root_of_unity(1, 2 * n).re();
  b.rhs().add(rhs_pref * detail::zeta(zarg) / (2 * cos_half));
  for (std::int64_t j = 0; j < n / 2; ++j) {
    const Angle theta{2 * j + 1, 2 * n};
    const BigComplex L = b.rotated(angle_key("rot", theta.num, theta.den), -zarg, N, beta, theta);
    const BigComplex phased = detail::root_of_unity(theta.num, theta.den) * L;
    b.rhs().add(rhs_pref * BigReal(-2 * sign_pow(n / 2 + j)) * phased.im());
  }

  // (-1)^{N/2+1} 2^{2Nm-1} sum_{j=0}^{m} B_{2j} B_{(2m+1-2j)N}/(...) alpha^{2j/(N+1)} beta^{N+(2N^2(m-j)-N)/(N+1)}
  const BigReal block_pref = sign_pow(n / 2 + 1) * rpow(BigReal(2), Rational(2 * n * m - 1));
  for (std::int64_t j = 0; j <= m; ++j) {
    const std::int64_t k = (2 * m + 1 - 2 * j) * n;
    const Rational c = bernoulli_pair(static_cast<unsigned>(2 * j), static_cast<unsigned>(k));
    if (c == 0) continue;
    b.rhs().add(block_pref * to_big(c) * rpow(alpha, Rational(2 * j) / np1) *
                rpow(beta, Rational(n) + Rational(2 * n * n * (m - j) - n) / np1));
  }
  return b.finish();
}

IdentityReport verify_ramanujan_odd(std::int64_t m, const BigReal& alpha_in, const BigReal& beta_in,
                                    const PrecisionContext& ctx) {
  if (m == 0) throw ConstraintError("m must be non-zero");
  ReportBuilder b(IdentityId::RamanujanOdd, ctx);
  const BigReal alpha = promote(alpha_in);
  const BigReal beta = promote(beta_in);
  constraint_for(IdentityId::RamanujanOdd).check(alpha, beta);
  b.param("m", m);
  b.param("alpha", alpha);
  b.param("beta", beta);

  const BigReal z = zeta_at(2 * m + 1);
  const BigReal lhs_pref = rpow(alpha, Rational(-m));
  b.lhs().add(lhs_pref * z / 2);
  b.lhs().add(lhs_pref * b.lambert("lhs", SeriesSpec{Rational(-2 * m - 1), Rational(1), BigReal(2 * alpha)}));

  const BigReal rhs_pref = sign_pow(m) * rpow(beta, Rational(-m));
  b.rhs().add(rhs_pref * z / 2);
  b.rhs().add(rhs_pref * b.lambert("rhs", SeriesSpec{Rational(-2 * m - 1), Rational(1), BigReal(2 * beta)}));
  const BigReal block_pref = -rpow(BigReal(2), Rational(2 * m));
  for (std::int64_t j = 0; j <= m + 1; ++j) {
    const Rational c =
        sign_pow(j) * bernoulli_pair(static_cast<unsigned>(2 * j), static_cast<unsigned>(2 * m + 2 - 2 * j));
    if (c == 0) continue;
    b.rhs().add(block_pref * to_big(c) * rpow(alpha, Rational(m + 1 - j)) * rpow(beta, Rational(j)));
  }
  return b.finish();
}

std::vector<PiPolynomialTerm> lerch_rhs_polynomial(unsigned N, std::int64_t m) {
  require_odd(N);
  if (m < 1) throw ConstraintError("m must be at least 1");
  const std::int64_t n = N;
  // (-1)^{m+(N+3)/2} 2^{2Nm+1} sum_j (-1)^j B_{2j} B_k/((2j)! k!) pi^{N(2m+1)+2j(1-N)}
  const Rational pref = sign_pow(m + (n + 3) / 2) * Rational(boost::multiprecision::pow(BigInt(2), 2 * n * m + 1));
  std::map<std::int64_t, Rational> by_power;
  const std::int64_t top = floor_div(n + 1 + 2 * n * m, 2 * n);
  for (std::int64_t j = 0; j <= top; ++j) {
    const std::int64_t k = n + 1 + 2 * n * (m - j);
    by_power[n * (2 * m + 1) + 2 * j * (1 - n)] +=
        pref * sign_pow(j) * bernoulli_pair(static_cast<unsigned>(2 * j), static_cast<unsigned>(k));
  }
  std::vector<PiPolynomialTerm> out;
  for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) {
    if (it->second != 0) out.push_back({it->second, it->first});
  }
  return out;
}

IdentityReport verify_lerch_gen(unsigned N, std::int64_t m, const PrecisionContext& ctx) {
  const std::vector<PiPolynomialTerm> poly = lerch_rhs_polynomial(N, m);
  ReportBuilder b(IdentityId::Lerch, ctx);
  b.param("N", N);
  b.param("m", m);
  std::string exact;
  for (const auto& t : poly) {
    exact += (exact.empty() ? "" : " + ") + t.coeff.str() + "*pi^" + std::to_string(t.pi_power);
  }
  b.param("rhs_exact", exact.empty() ? "0" : exact);

  const std::int64_t n = N;
  const BigReal pi = pi_value();
  const BigReal two_N = boost::multiprecision::pow(BigReal(2), N);
  // zeta(2Nm+1) + 2 sum n^{-2Nm-1}/(exp((2n)^N pi) - 1)
  b.lhs().add(zeta_at(2 * n * m + 1));
  b.lhs().add(2 * b.lambert("lhs", SeriesSpec{Rational(-2 * n * m - 1), Rational(n), BigReal(two_N * pi)}));
  // - (-1)^m 2^{2m(N-1)}/N (zeta(2m+1) + 2 (-1)^{(N+3)/2} sum_j (-1)^j L_j)
  const BigReal pref = -sign_pow(m) * rpow(BigReal(2), Rational(2 * m * (n - 1))) / N;
  b.lhs().add(pref * zeta_at(2 * m + 1));
  std::vector<BigComplex> parts;
  alternating_rotations(b, "rot", Rational(-2 * m - 1), N, pi, &parts);
  for (const auto& p : parts) b.lhs().add(pref * 2 * sign_pow((n + 3) / 2) * p);

  for (const auto& t : poly) b.rhs().add(to_big(t.coeff) * boost::multiprecision::pow(pi, t.pi_power));
  return b.finish();
}

IdentityReport verify_wigert_classic(unsigned N, const BigReal& x_in, const PrecisionContext& ctx) {
  require_even(N);
  ReportBuilder b(IdentityId::WigertClassic, ctx);
  const BigReal x = promote(x_in);
  require_positive(x, "x");
  b.param("N", N);
  b.param("x", x);
  const std::int64_t n = N;

  b.lhs().add(b.lambert("lhs", SeriesSpec{Rational(0), Rational(n), x}));

  const BigReal pi = pi_value();
  b.rhs().add(zeta_at(n) / x);
  b.rhs().add(rpow(x, Rational(-1, n)) * detail::gamma(1 + to_big(Rational(1, n))) * detail::zeta(Rational(1, n)));
  b.rhs().add(BigReal(1) / 4);

  // (-1)^{N/2-1}/N (2pi/x)^{1/N} sum_j { e^{i pi (2j+1)(N-1)/2N} Lbar(2pi (2pi/x)^{1/N} e^{-(2j+1) pi i/2N}) + conj }
  const BigReal scale = rpow(2 * pi / x, Rational(1, n));
  const BigReal pref = sign_pow(n / 2 - 1) * scale / n;
  for (std::int64_t j = 0; j < n / 2; ++j) {
    for (int side = -1; side <= 1; side += 2) {
      const BigComplex phase = detail::root_of_unity(side * (2 * j + 1) * (n - 1), 2 * n);
      const BigComplex arg = 2 * pi * scale * detail::root_of_unity(-side * (2 * j + 1), 2 * n);
      const BigComplex L = b.lambert(angle_key(side < 0 ? "lbar-" : "lbar+", 2 * j + 1, 2 * n),
                                     SeriesSpec{Rational(1, n) - 1, Rational(1, n), arg});
      b.rhs().add(pref * phase * L);
    }
  }
  return b.finish();
}

IdentityReport verify_zeta_half(const BigReal& alpha_in, const BigReal& beta_in, const PrecisionContext& ctx) {
  ReportBuilder b(IdentityId::ZetaHalf, ctx);
  const BigReal alpha = promote(alpha_in);
  const BigReal beta = promote(beta_in);
  constraint_for(IdentityId::ZetaHalf).check(alpha, beta);
  b.param("alpha", alpha);
  b.param("beta", beta);

  b.lhs().add(b.lambert("lhs", SeriesSpec{Rational(0), Rational(2), alpha}));

  const BigReal pi = pi_value();
  b.rhs().add(pi * pi / (6 * alpha));
  b.rhs().add(BigReal(1) / 4);
  const BigReal root_beta = boost::multiprecision::sqrt(beta);
  const BigReal pref = root_beta / (4 * pi);
  const BigReal z_half = detail::zeta(Rational(1, 2));
  b.rhs().add(pref * z_half);

  // sum (cos t - sin t - e^{-t}) / (sqrt(n) (cosh t - cos t)), t = sqrt(n beta).
  // |term| <= 12 n^{-1/2} e^{-sqrt(beta) n^{1/2}} once e^t >= 4.
  const double rb = root_beta.convert_to<double>();
  DecayProfile profile{std::log(12.0), -0.5, rb, 0.5, std::ceil(std::pow(std::log(4.0) / rb, 2))};
  const TruncationEstimate plan =
      plan_truncation(profile, std::log(std::abs(z_half.convert_to<double>())), b.ctx(), "zeta(1/2) companion series");
  BigReal series = 0;
  for (std::uint64_t k = 1; k <= plan.n_max; ++k) {
    const BigReal nk = to_big(static_cast<std::int64_t>(k));
    const BigReal t = boost::multiprecision::sqrt(nk * beta);
    BigReal s, c;
    sin_cos(t, s, c);
    const BigReal em = boost::multiprecision::exp(-t);
    const BigReal cosh_t = (1 / em + em) / 2;
    series += (c - s - em) / (boost::multiprecision::sqrt(nk) * (cosh_t - c));
  }
  b.record_truncation("rhs", plan);
  b.rhs().add(pref * series);
  return b.finish();
}

IdentityReport verify_ram_spl(std::int64_t m, const BigReal& alpha_in, const BigReal& beta_in,
                              const PrecisionContext& ctx) {
  if (m < 2) throw ConstraintError("m must be at least 2");
  ReportBuilder b(IdentityId::RamSpl, ctx);
  const BigReal alpha = promote(alpha_in);
  const BigReal beta = promote(beta_in);
  constraint_for(IdentityId::RamSpl).check(alpha, beta);
  b.param("m", m);
  b.param("alpha", alpha);
  b.param("beta", beta);

  const BigReal am = boost::multiprecision::pow(alpha, m);
  const BigReal mbm = sign_pow(m) * boost::multiprecision::pow(beta, m);  // (-beta)^m
  b.lhs().add(am * b.lambert("alpha", SeriesSpec{Rational(2 * m - 1), Rational(1), BigReal(2 * alpha)}));
  b.lhs().sub(mbm * b.lambert("beta", SeriesSpec{Rational(2 * m - 1), Rational(1), BigReal(2 * beta)}));
  const BigReal c = to_big(bernoulli(static_cast<unsigned>(2 * m)) / Rational(4 * m));
  b.rhs().add(am * c);
  b.rhs().sub(mbm * c);
  return b.finish();
}

IdentityReport verify_ram_spl0(const BigReal& alpha_in, const BigReal& beta_in, const PrecisionContext& ctx) {
  ReportBuilder b(IdentityId::RamSpl0, ctx);
  const BigReal alpha = promote(alpha_in);
  const BigReal beta = promote(beta_in);
  constraint_for(IdentityId::RamSpl0).check(alpha, beta);
  b.param("alpha", alpha);
  b.param("beta", beta);
  b.lhs().add(alpha * b.lambert("alpha", SeriesSpec{Rational(1), Rational(1), BigReal(2 * alpha)}));
  b.lhs().add(beta * b.lambert("beta", SeriesSpec{Rational(1), Rational(1), BigReal(2 * beta)}));
  b.rhs().add((alpha + beta) / 24);
  b.rhs().sub(BigReal(1) / 4);
  return b.finish();
}

IdentityReport verify_log_dedekind(const BigReal& alpha_in, const BigReal& beta_in, const PrecisionContext& ctx) {
  ReportBuilder b(IdentityId::LogDedekind, ctx);
  const BigReal alpha = promote(alpha_in);
  const BigReal beta = promote(beta_in);
  constraint_for(IdentityId::LogDedekind).check(alpha, beta);
  b.param("alpha", alpha);
  b.param("beta", beta);
  b.lhs().add(b.lambert("alpha", SeriesSpec{Rational(-1), Rational(1), BigReal(2 * alpha)}));
  b.lhs().sub(b.lambert("beta", SeriesSpec{Rational(-1), Rational(1), BigReal(2 * beta)}));
  b.rhs().add((beta - alpha) / 12);
  b.rhs().add(boost::multiprecision::log(alpha / beta) / 4);
  return b.finish();
}

IdentityReport verify_cor_z3z7(const BigReal& alpha_in, const BigReal& beta_in, const PrecisionContext& ctx) {
  ReportBuilder b(IdentityId::CorZ3Z7, ctx);
  const BigReal alpha = promote(alpha_in);
  const BigReal beta = promote(beta_in);
  constraint_for(IdentityId::CorZ3Z7).check(alpha, beta);
  b.param("alpha", alpha);
  b.param("beta", beta);

  const BigReal a32 = rpow(alpha, Rational(-3, 2));
  b.lhs().add(a32 * zeta_at(7) / 2);
  b.lhs().add(a32 * b.lambert("lhs", SeriesSpec{Rational(-7), Rational(3), BigReal(8 * alpha)}));

  b.rhs().add(rpow(beta, Rational(15, 2)) / 748440);
  b.rhs().add(boost::multiprecision::sqrt(alpha) * boost::multiprecision::pow(beta, 3) / 135);
  // L(z) = sum n^{-3}/(exp((2n)^{1/3} z) - 1)
  const BigReal cbrt2 = root_n(BigReal(2), 3);
  const BigComplex omega = detail::root_of_unity(2, 3);
  auto L = [&](const char* key, const BigComplex& z) {
    return b.lambert(key, SeriesSpec{Rational(-3), Rational(1, 3), cbrt2 * z});
  };
  const BigReal pref = BigReal(-16) / 3 * rpow(beta, Rational(-3, 2));
  b.rhs().add(pref * zeta_at(3) / 2);
  b.rhs().sub(pref * L("beta", BigComplex(beta)));
  b.rhs().add(pref * L("-beta*omega", -beta * omega));
  b.rhs().add(pref * L("-beta*omega^2", -beta * omega * omega));
  return b.finish();
}

IdentityReport verify_cor_abpi(const BigReal& alpha_in, const BigReal& beta_in, const PrecisionContext& ctx) {
  ReportBuilder b(IdentityId::CorAbpi, ctx);
  const BigReal alpha = promote(alpha_in);
  const BigReal beta = promote(beta_in);
  constraint_for(IdentityId::CorAbpi).check(alpha, beta);
  b.param("alpha", alpha);
  b.param("beta", beta);

  b.lhs().add(b.lambert("lhs", SeriesSpec{Rational(-1), Rational(3), BigReal(8 * alpha)}));
  const BigReal cbrt2 = root_n(BigReal(2), 3);
  const BigComplex omega = detail::root_of_unity(2, 3);
  auto L = [&](const char* key, const BigComplex& z) {
    return b.lambert(key, SeriesSpec{Rational(-1), Rational(1, 3), cbrt2 * z});
  };
  const BigReal third = BigReal(1) / 3;
  b.lhs().add(third * L("beta", BigComplex(beta)));
  b.lhs().sub(third * L("-beta*omega", -beta * omega));
  b.lhs().sub(third * L("-beta*omega^2", -beta * omega * omega));

  b.rhs().add((ln2_value() - detail::euler_gamma()) / 3);
  b.rhs().add(boost::multiprecision::log(alpha / beta) / 8);
  b.rhs().add(boost::multiprecision::pow(beta, 3) / 720);
  return b.finish();
}

Rational bernoulli_sum_zero(std::int64_t m) {
  if (m < 0) throw ConstraintError("m must be non-negative");
  Rational total = 0;
  for (std::int64_t j = 0; j <= m + 1; ++j) {
    total += sign_pow(j) * bernoulli_pair(static_cast<unsigned>(2 * j), static_cast<unsigned>(2 * m + 2 - 2 * j));
  }
  return total;
}

IdentityReport verify_bernoulli_sum_zero(std::int64_t m, const PrecisionContext& ctx) {
  ReportBuilder b(IdentityId::BernoulliSumZero, ctx);
  const Rational s = bernoulli_sum_zero(m);
  b.param("m", m);
  b.param("exact", s.str());
  if (m % 2 != 0) b.note("m is odd; the sum is not expected to vanish");
  b.lhs().add(to_big(s));
  return b.finish();
}

std::vector<ZetaRelationRow> zeta_relation_rows(std::int64_t max_m, unsigned max_N) {
  if (max_m < 1 || max_N < 1) throw UsageError("table bounds must be at least 1");
  std::vector<ZetaRelationRow> rows;
  for (std::int64_t m = 1; m <= max_m; ++m) {
    for (unsigned N = 1; N <= max_N; N += 2) {
      const std::int64_t n = N;
      rows.push_back({m, N, 2 * m + 1, 2 * n * m + 1, N == 1 && m % 2 == 0});
    }
  }
  return rows;
}

}  // namespace lamzeta
