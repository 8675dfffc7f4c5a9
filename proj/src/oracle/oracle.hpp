#pragma once

#include "identities/report.hpp"
#include "numerics/bigreal.hpp"
#include "numerics/precision.hpp"

#include <cstdint>
#include <vector>

namespace lamzeta {

/// Vertical line Re(s) = c0, truncated at |Im s| = t_max. quad_points is the
/// starting number of Gauss-Legendre nodes per panel; it is doubled until
/// two successive rules agree.
struct ContourSpec {
  BigReal c0;
  BigReal t_max;
  unsigned quad_points = 16;
};

/// Abscissa of the strip of absolute convergence, max((N - 2h + 1)/N, 1).
Rational contour_abscissa_floor(unsigned N, std::int64_t h);

/// c0 half a unit inside the strip and t_max from the Stirling tail bound.
ContourSpec default_contour(unsigned N, std::int64_t h, const BigReal& x, const PrecisionContext& ctx);

struct MellinResult {
  BigReal value;
  BigReal quad_error;   // |I(2q) - I(q)| from the last doubling
  BigReal tail_bound;   // bound on the part of the line beyond t_max
  unsigned quad_points = 0;
  unsigned panels = 0;
};

/// (1/2 pi i) int_{(c0)} Gamma(s) zeta(s) zeta(Ns - (N - 2h)) x^{-s} ds,
/// which equals sum n^{N-2h}/(e^{n^N x} - 1).
/// Throws ConvergenceError when the tail beyond t_max is above the target
/// (the message names the height needed) or when doubling the nodes does not
/// settle. Throws DomainError when c0 is outside the strip.
MellinResult mellin_integral(unsigned N, std::int64_t h, const BigReal& x, const ContourSpec& spec,
                             const PrecisionContext& ctx);

/// Gauss-Legendre nodes and weights on [-1, 1] at the current precision.
struct GaussRule {
  std::vector<BigReal> nodes;
  std::vector<BigReal> weights;
};
GaussRule gauss_legendre(unsigned points);

struct OracleComparison {
  BigReal lambert;
  BigReal mellin;
  BigReal abs_diff;
  int digits_agreed = 0;
  int target_digits = 0;
  bool achieved = false;
  MellinResult detail;
  std::uint64_t lambert_terms = 0;
};

/// Digits target of an oracle run: decimal_digits - 5.
int oracle_target_digits(const PrecisionContext& ctx);

/// Direct Lambert sum against the contour integral on the default contour,
/// or on `contour` when given.
OracleComparison oracle_compare(unsigned N, std::int64_t h, const BigReal& x, const PrecisionContext& ctx,
                                const ContourSpec* contour = nullptr);

/// sigma_k(n) = sum_{d | n} d^k, exact.
Rational divisor_sigma(std::int64_t k, std::uint64_t n);

/// One residue of Gamma(s) zeta(s) zeta(s + 2m + 1) y^{-s}:
/// coeff * zeta(2m+1)^{zeta_power} * pi^{pi_power} * y^{y_power}.
struct ResidueTerm {
  std::int64_t pole = 0;
  Rational coeff;
  int zeta_power = 0;
  std::int64_t pi_power = 0;
  std::int64_t y_power = 0;
};

/// Residues at s = -2m, 0, 1 and -1, -3, ..., -(2m+1), in that order.
std::vector<ResidueTerm> cn_residues(std::int64_t m);

IdentityReport cn_corrected(std::int64_t m, const BigReal& y, const PrecisionContext& ctx);
/// The same identity with the residue sum replaced by -zeta(2m+1)/2 alone.
/// Expected to fail.
IdentityReport cn_erroneous_demo(std::int64_t m, const BigReal& y, const PrecisionContext& ctx);

}  // namespace lamzeta
