#pragma once

#include "identities/report.hpp"
#include "numerics/bigreal.hpp"
#include "numerics/precision.hpp"

#include <cstdint>
#include <vector>

namespace lamzeta {

/// alpha * beta^N = coeff * pi^pi_power
struct PairConstraint {
  unsigned N = 1;
  Rational coeff = 1;
  std::int64_t pi_power = 2;

  BigReal target() const;
  BigReal solve_beta(const BigReal& alpha) const;
  BigReal solve_alpha(const BigReal& beta) const;
  /// Throws ConstraintError unless alpha, beta > 0 and the relation holds to
  /// working precision.
  void check(const BigReal& alpha, const BigReal& beta) const;
  std::string describe() const;
};

/// The relation an identity imposes on (alpha, beta); N is used by the
/// generalized identities and ignored by the classical ones.
PairConstraint constraint_for(IdentityId id, unsigned N = 1);

IdentityReport verify_kty_extended(unsigned N, std::int64_t h, const BigReal& x, const PrecisionContext& ctx);
IdentityReport verify_zeta_gen(unsigned N, std::int64_t m, const BigReal& alpha, const BigReal& beta,
                               const PrecisionContext& ctx);
IdentityReport verify_eta_gen(unsigned N, const BigReal& alpha, const BigReal& beta, const PrecisionContext& ctx);
IdentityReport verify_wigert_gen(unsigned N, std::int64_t m, const BigReal& alpha, const BigReal& beta,
                                 const PrecisionContext& ctx);
IdentityReport verify_ramanujan_odd(std::int64_t m, const BigReal& alpha, const BigReal& beta,
                                    const PrecisionContext& ctx);
/// The alpha = beta = pi case of verify_zeta_gen scaled by 2 pi^{2Nm/(N+1)},
/// with the right side kept as an exact polynomial in pi.
IdentityReport verify_lerch_gen(unsigned N, std::int64_t m, const PrecisionContext& ctx);
IdentityReport verify_wigert_classic(unsigned N, const BigReal& x, const PrecisionContext& ctx);
IdentityReport verify_zeta_half(const BigReal& alpha, const BigReal& beta, const PrecisionContext& ctx);
IdentityReport verify_ram_spl(std::int64_t m, const BigReal& alpha, const BigReal& beta, const PrecisionContext& ctx);
IdentityReport verify_ram_spl0(const BigReal& alpha, const BigReal& beta, const PrecisionContext& ctx);
IdentityReport verify_log_dedekind(const BigReal& alpha, const BigReal& beta, const PrecisionContext& ctx);
IdentityReport verify_cor_z3z7(const BigReal& alpha, const BigReal& beta, const PrecisionContext& ctx);
IdentityReport verify_cor_abpi(const BigReal& alpha, const BigReal& beta, const PrecisionContext& ctx);

/// sum_{j=0}^{m+1} (-1)^j B_{2j} B_{2m+2-2j} / ((2j)! (2m+2-2j)!), exactly.
/// Zero for every even m >= 2.
Rational bernoulli_sum_zero(std::int64_t m);
IdentityReport verify_bernoulli_sum_zero(std::int64_t m, const PrecisionContext& ctx);

/// Coefficients of a polynomial in pi: coefficient c at power p means c pi^p.
struct PiPolynomialTerm {
  Rational coeff;
  std::int64_t pi_power = 0;
};
/// Exact right side of verify_lerch_gen.
std::vector<PiPolynomialTerm> lerch_rhs_polynomial(unsigned N, std::int64_t m);

/// One row of the odd zeta relation table: the pair (zeta(2m+1), zeta(2Nm+1))
/// tied together by verify_zeta_gen.
struct ZetaRelationRow {
  std::int64_t m = 1;
  unsigned N = 1;
  std::int64_t low_arg = 3;   // 2m+1
  std::int64_t high_arg = 3;  // 2Nm+1
  bool degenerate = false;    // the relation collapses to 0 = 0 (N = 1, m even)
};
/// Rows for 1 <= m <= max_m and odd 1 <= N <= max_N, ordered by m then N.
std::vector<ZetaRelationRow> zeta_relation_rows(std::int64_t max_m, unsigned max_N);

}  // namespace lamzeta
