#pragma once

// Shared plumbing for the verify_* functions: precision scope, timing, term
// bookkeeping and the final comparison.

#include "identities/report.hpp"
#include "lambert/lambert.hpp"

#include <chrono>
#include <climits>
#include <string>
#include <vector>

namespace lamzeta::detail {

class ReportBuilder {
 public:
  ReportBuilder(IdentityId id, const PrecisionContext& ctx);

  const PrecisionContext& ctx() const { return ctx_; }
  Side& lhs() { return lhs_; }
  Side& rhs() { return rhs_; }

  void param(const std::string& key, std::int64_t v) { report_.params[key] = std::to_string(v); }
  void param(const std::string& key, const BigReal& v);
  void param(const std::string& key, const std::string& v) { report_.params[key] = v; }
  void note(const std::string& text) { report_.notes.push_back(text); }

  /// Sums a Lambert series and books its term count under `key`.
  BigComplex lambert(const std::string& key, const SeriesSpec& spec);
  /// Rotated sum; the angle -theta of an already summed theta is recovered
  /// by conjugation, since r and beta are real.
  BigComplex rotated(const std::string& key, const Rational& r, unsigned N, const BigReal& beta, Angle theta);
  /// Books a series summed elsewhere.
  void record_truncation(const std::string& key, const TruncationEstimate& t);

  IdentityReport finish();

 private:
  PrecisionContext ctx_;
  PrecisionScope scope_;
  IdentityReport report_;
  Side lhs_;
  Side rhs_;
  std::chrono::steady_clock::time_point start_;
  int certified_ = INT_MAX;

  struct RotatedEntry {
    Rational r;
    unsigned N;
    BigReal beta;
    Angle theta;
    LambertResult result;
  };
  std::vector<RotatedEntry> rotated_;
};

inline constexpr const char* kBudgetNote = ": term budget reached, tail certifies ";

/// True when some series in the report stopped at max_terms.
bool hit_term_budget(const IdentityReport& report);

/// (-1)^e for any integer e.
inline int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

/// zeta(k) for integer k != 1; exact for k <= 0 and for even k.
BigReal zeta_at(std::int64_t k);

}  // namespace lamzeta::detail
