#pragma once

#include "lambert/tail.hpp"
#include "numerics/bigreal.hpp"
#include "numerics/precision.hpp"

#include <cstdint>

namespace lamzeta {

/// Parameters of sum_{n>=1} n^r / (exp(n^s x) - 1).
struct SeriesSpec {
  Rational r;
  Rational s;
  BigComplex x;

  /// Throws DomainError unless s > 0 and Re(x) > 0.
  void validate() const;
};

struct LambertResult {
  BigComplex value;
  TruncationEstimate truncation;
};

/// Smallest n_max whose dropped tail is below 10^{-decimal_digits} times the
/// size of the sum, using |term| <= 2 n^r exp(-n^s Re x) once n^s Re x >= ln 2.
/// Throws BudgetExceeded if n_max would pass ctx.max_terms, unless
/// ctx.allow_reduced_target is set, in which case the cap is used and the
/// achievable digits are reported.
TruncationEstimate truncation_bound(const SeriesSpec& spec, const PrecisionContext& ctx);

LambertResult lambert_sum(const SeriesSpec& spec, const PrecisionContext& ctx);

/// Rotation angle pi * num / den.
struct Angle {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// sum n^r / (exp((2n)^{1/N} beta e^{i theta}) - 1), i.e. lambert_sum with
/// s = 1/N and x = 2^{1/N} beta e^{i theta}. Throws DomainError when
/// cos(theta) <= 0.
LambertResult lambert_sum_rotated(const Rational& r, unsigned N, const BigReal& beta, Angle theta,
                                  const PrecisionContext& ctx);

/// The angle pi j / N.
LambertResult lambert_sum_rotated(const Rational& r, unsigned N, const BigReal& beta, std::int64_t j,
                                  const PrecisionContext& ctx);

namespace detail {
// Caller owns the PrecisionScope.
LambertResult lambert_sum(const SeriesSpec& spec, const PrecisionContext& ctx);
LambertResult lambert_sum_rotated(const Rational& r, unsigned N, const BigReal& beta, Angle theta,
                                  const PrecisionContext& ctx);
}  // namespace detail

}  // namespace lamzeta
