#pragma once

#include "numerics/bigreal.hpp"
#include "numerics/precision.hpp"

#include <cstdint>

namespace lamzeta {

/// Euler's constant, cached per working precision.
BigReal euler_gamma(const PrecisionContext& ctx);

/// e^{i pi j / denom}. Angles that are multiples of pi/6 or pi/4 get exact
/// components (0, 1/2, sqrt(2)/2, sqrt(3)/2 and signs).
BigComplex root_of_unity(std::int64_t j, std::int64_t denom, const PrecisionContext& ctx);

namespace detail {
BigReal euler_gamma();
BigComplex root_of_unity(std::int64_t j, std::int64_t denom);
}  // namespace detail

}  // namespace lamzeta
