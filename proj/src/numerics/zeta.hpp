#pragma once

#include "numerics/bigreal.hpp"
#include "numerics/precision.hpp"

#include <cstdint>

namespace lamzeta {

/// zeta(2m) / pi^{2m} = (-1)^{m+1} 2^{2m} B_{2m} / (2 (2m)!), exact.
Rational zeta_even_coefficient(unsigned m);

/// zeta(2m) for m >= 1 from the Bernoulli closed form.
BigReal zeta_even(unsigned m, const PrecisionContext& ctx);

/// zeta(-n) for n >= 0, exact: -1/2 at n = 0, otherwise -B_{n+1}/(n+1).
Rational zeta_nonpositive_int(std::int64_t n);

/// Riemann zeta on the real line, s != 1. Non-positive integers are exact,
/// other negative arguments go through the functional equation, the rest
/// through Euler-Maclaurin summation.
BigReal zeta_real(const BigReal& s, const PrecisionContext& ctx);

/// Euler-Maclaurin evaluation for complex s != 1 (intended for Re(s) > 0).
BigComplex zeta_complex(const BigComplex& s, const PrecisionContext& ctx);

/// Gamma(s) zeta(s) continued analytically through the negative even
/// integers, where it equals (-1)^k zeta(2k+1) / (2 (2 pi)^{2k}) at s = -2k.
/// Throws DomainError at the genuine poles s = 0, 1, -1, -3, ...
BigReal gamma_zeta_product(const Rational& s, const PrecisionContext& ctx);

namespace detail {
// Working-precision variants; the caller owns the PrecisionScope.
BigReal zeta(const BigReal& s);
BigReal zeta(const Rational& s);
BigComplex zeta(const BigComplex& s);
BigReal gamma_zeta_product(const Rational& s);
}  // namespace detail

}  // namespace lamzeta
