#include "lambert/tail.hpp"

#include "numerics/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lamzeta {

// Once t -> t^p e^{-c t^q} is decreasing on [m, inf), the tail is below
//   int_m^inf C t^p e^{-c t^q} dt = C / (q c^a) * Gamma(a, U),
// a = (p+1)/q, U = c m^q, and
//   Gamma(a, U) <= U^{a-1} e^{-U}                    for a <= 1,
//   Gamma(a, U) <= U^{a-1} e^{-U} / (1 - (a-1)/U)    for a > 1, U > a-1.
double log_tail_bound(const DecayProfile& profile, double m) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (m < profile.n_valid || m < 1) return inf;
  const double q = profile.exponent;
  const double c = profile.rate;
  const double u = c * std::pow(m, q);
  if (!(c * q * std::pow(m, q) > profile.power)) return inf;
  const double a = (profile.power + 1.0) / q;
  double log_gamma = (a - 1.0) * std::log(u) - u;
  if (a > 1.0) {
    const double ratio = (a - 1.0) / u;
    if (ratio >= 0.5) return inf;
    log_gamma -= std::log1p(-ratio);
  }
  return profile.log_coeff - std::log(q) - a * std::log(c) + log_gamma;
}

std::uint64_t smallest_cutoff(const DecayProfile& profile, double log_target) {
  constexpr double limit = 4.611686018427387904e18;  // 2^62
  double hi = 1;
  while (log_tail_bound(profile, hi) > log_target) {
    hi *= 2;
    if (hi > limit) return 0;
  }
  double lo = hi / 2;
  if (hi == 1) return 1;
  // Invariant: bound(lo) > target (or lo unusable), bound(hi) <= target.
  while (hi - lo > 1) {
    const double mid = std::floor((lo + hi) / 2);
    if (log_tail_bound(profile, mid) <= log_target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return static_cast<std::uint64_t>(hi);
}

namespace {

constexpr double kLn10 = 2.302585092994045684;

int digits_from_logs(double log_tail, double log_size) {
  if (std::isinf(log_tail)) return 0;
  const double d = (log_size - log_tail) / kLn10;
  return d < 0 ? 0 : static_cast<int>(std::floor(d));
}

}  // namespace

TruncationEstimate plan_truncation(const DecayProfile& profile, double log_size, const PrecisionContext& ctx,
                                   const std::string& what) {
  const double log_target = log_size - ctx.decimal_digits * kLn10;
  const std::uint64_t n_max = smallest_cutoff(profile, log_target);
  TruncationEstimate out;
  if (n_max == 0 || n_max > ctx.max_terms) {
    const double cap = static_cast<double>(ctx.max_terms);
    const int achievable = std::min(ctx.decimal_digits, digits_from_logs(log_tail_bound(profile, cap), log_size));
    if (!ctx.allow_reduced_target) {
      const std::string need = n_max == 0 ? std::string("more than 2^62") : std::to_string(n_max);
      throw BudgetExceeded(what + " needs " + need + " terms for " + std::to_string(ctx.decimal_digits) +
                               " digits; max_terms " + std::to_string(ctx.max_terms) + " certifies about " +
                               std::to_string(achievable) + " digits",
                           n_max == 0 ? std::numeric_limits<std::uint64_t>::max() : n_max, achievable);
    }
    out.n_max = ctx.max_terms;
    out.certified_digits = achievable;
    out.reduced = true;
  } else {
    out.n_max = n_max;
    out.certified_digits = ctx.decimal_digits;
  }
  const double lt = log_tail_bound(profile, static_cast<double>(out.n_max));
  out.tail_bound = std::isinf(lt) ? BigReal(1e300) : BigReal(boost::multiprecision::exp(BigReal(lt)));
  return out;
}

}  // namespace lamzeta
