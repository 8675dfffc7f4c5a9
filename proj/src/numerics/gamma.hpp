#pragma once

#include "numerics/bigreal.hpp"
#include "numerics/precision.hpp"

namespace lamzeta {

/// Gamma(s) for complex s away from the poles 0, -1, -2, ...
/// Throws DomainError at a pole.
BigComplex gamma_complex(const BigComplex& s, const PrecisionContext& ctx);

namespace detail {
// Both assume the caller has set the working precision.
BigComplex gamma(const BigComplex& s);
BigReal gamma(const BigReal& s);
}  // namespace detail

}  // namespace lamzeta
