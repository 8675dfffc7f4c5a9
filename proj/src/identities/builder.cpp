#include "identities/builder.hpp"

#include "numerics/error.hpp"
#include "numerics/zeta.hpp"

#include <cmath>

namespace lamzeta::detail {

ReportBuilder::ReportBuilder(IdentityId id, const PrecisionContext& ctx)
    : ctx_((ctx.validate(), ctx)), scope_(ctx), start_(std::chrono::steady_clock::now()) {
  report_.id = id;
}

void ReportBuilder::param(const std::string& key, const BigReal& v) {
  report_.params[key] = to_decimal(v, std::min(ctx_.decimal_digits, 30));
}

void ReportBuilder::record_truncation(const std::string& key, const TruncationEstimate& t) {
  report_.term_counts[key] = t.n_max;
  if (t.reduced) {
    certified_ = std::min(certified_, t.certified_digits);
    note(key + kBudgetNote + std::to_string(t.certified_digits) + " digits");
  }
}

BigComplex ReportBuilder::lambert(const std::string& key, const SeriesSpec& spec) {
  LambertResult r = detail::lambert_sum(spec, ctx_);
  record_truncation(key, r.truncation);
  return r.value;
}

BigComplex ReportBuilder::rotated(const std::string& key, const Rational& r, unsigned N, const BigReal& beta,
                                  Angle theta) {
  for (const auto& e : rotated_) {
    // a/b == -c/d  <=>  a d == -c b
    if (e.r == r && e.N == N && e.beta == beta && e.theta.num * theta.den == -theta.num * e.theta.den) {
      record_truncation(key, e.result.truncation);
      return conj(e.result.value);
    }
  }
  LambertResult res = detail::lambert_sum_rotated(r, N, beta, theta, ctx_);
  record_truncation(key, res.truncation);
  rotated_.push_back({r, N, beta, theta, res});
  return res.value;
}

IdentityReport ReportBuilder::finish() {
  report_.lhs = lhs_.total();
  report_.rhs = rhs_.total();
  const BigReal scale = boost::multiprecision::max(lhs_.scale(), rhs_.scale());
  finalize_comparison(report_, scale, ctx_);
  if (certified_ != INT_MAX) {
    // Each truncated series is certified relative to its own size; digits
    // lost to cancellation between terms come off the reachable target.
    report_.target_digits = std::min(report_.target_digits, std::max(1, certified_ - report_.cancelled_digits));
    report_.achieved = report_.digits_agreed >= report_.target_digits;
  }
  report_.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  return report_;
}

bool hit_term_budget(const IdentityReport& report) {
  for (const auto& n : report.notes) {
    if (n.find(kBudgetNote) != std::string::npos) return true;
  }
  return false;
}

BigReal zeta_at(std::int64_t k) {
  if (k == 1) throw DomainError("zeta has a pole at s = 1");
  if (k <= 0) return to_big(zeta_nonpositive_int(-k));
  if (k % 2 == 0) {
    return to_big(zeta_even_coefficient(static_cast<unsigned>(k / 2))) *
           boost::multiprecision::pow(pi_value(), static_cast<long>(k));
  }
  return detail::zeta(to_big(k));
}

}  // namespace lamzeta::detail
