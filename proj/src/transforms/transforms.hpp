#pragma once

#include "lambert/tail.hpp"
#include "numerics/bigreal.hpp"
#include "numerics/precision.hpp"

#include <cstdint>
#include <vector>

namespace lamzeta {

struct TransformParams {
  unsigned N = 1;
  std::int64_t h = 0;
  BigReal x;

  /// Throws DomainError unless N >= 1 and x > 0.
  void validate() const;
  /// N - 2h == -1, where the residue at s = 0 is a double pole.
  bool is_log_case() const { return static_cast<std::int64_t>(N) - 2 * h == -1; }
};

/// pi (2 pi y)^{1/N}
BigReal coeff_A(const BigReal& y, unsigned N, const PrecisionContext& ctx);

struct CosSin {
  BigReal cos;
  BigReal sin;
};

/// (cos(pi j / 2N), sin(pi j / 2N)) for 0 <= j <= N.
CosSin coeff_ab(std::int64_t j, unsigned N, const PrecisionContext& ctx);

/// e^{-A} / (2 sinh A) with A = A_N(n/x), evaluated as 1/(e^{2A} - 1).
BigReal kernel_f0(const BigReal& x, std::uint64_t n, unsigned N, const PrecisionContext& ctx);

/// f_j(x; n, N, h) for j >= 1, through 2 Re(e^{iuv} / (exp(a e^{-iu}) - 1))
/// with a = 2 A_N(n/x), u = pi j / 2N, v = 2h - 1.
BigReal kernel_fj(const BigReal& x, std::uint64_t n, unsigned N, std::int64_t h, std::int64_t j,
                  const PrecisionContext& ctx);

/// The same quotient in its cos/cosh form; kept for cross-checks.
BigReal kernel_fj_trig(const BigReal& x, std::uint64_t n, unsigned N, std::int64_t h, std::int64_t j,
                       const PrecisionContext& ctx);

struct KernelPoint {
  BigReal a;
  BigReal u;
  BigReal v;
};

/// [cos(a sin u + uv) - e^{-a cos u} cos(uv)] / [cosh(a cos u) - cos(a sin u)]
BigReal kernel_trig_form(const KernelPoint& p);
/// 2 Re(e^{iuv} / (exp(a e^{-iu}) - 1))
BigReal kernel_exp_form(const KernelPoint& p);

/// -zeta(2h-N)/2 + zeta(2h)/x + (1/N) Gamma(s0) zeta(s0) x^{-s0}, s0 = (N-2h+1)/N.
BigReal poly_P(const TransformParams& params, const PrecisionContext& ctx);

/// coeff * pi^pi_power * x^x_power
struct PiMonomial {
  Rational coeff;
  std::int64_t pi_power = 0;
  std::int64_t x_power = 0;
};

/// Terms of P1 - P, one per j = 1..floor(h/N); empty when floor(h/N) < 1.
std::vector<PiMonomial> p1_correction_terms(unsigned N, std::int64_t h);

BigReal poly_P1(const TransformParams& params, const PrecisionContext& ctx);

struct SeriesSResult {
  BigReal value;
  BigReal imag_residual;  // imaginary part left by the symmetric complex evaluation
  TruncationEstimate truncation;
};

/// S(x; N, h) for odd and even N.
SeriesSResult series_S(const TransformParams& params, const PrecisionContext& ctx);

namespace detail {
BigReal poly_P(const TransformParams& params);
BigReal poly_P1(const TransformParams& params);
SeriesSResult series_S(const TransformParams& params, const PrecisionContext& ctx);
BigReal evaluate(const std::vector<PiMonomial>& terms, const BigReal& x);
}  // namespace detail

}  // namespace lamzeta
