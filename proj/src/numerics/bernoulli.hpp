#pragma once

#include "numerics/bigreal.hpp"

namespace lamzeta {

/// Exact B_n with x/(e^x - 1) = sum_{n>=0} B_n x^n / n!, so B_1 = -1/2.
/// Values are cached process-wide; safe to call from several threads.
Rational bernoulli(unsigned n);

/// n! as an exact integer.
BigInt factorial(unsigned n);

/// B_n / n! exactly.
Rational bernoulli_over_factorial(unsigned n);

/// B_{2k}/(2k)! rounded to the current precision, cached per precision and
/// per thread. Used by the Euler-Maclaurin and Stirling expansions.
const BigReal& even_bernoulli_coefficient(unsigned k);

}  // namespace lamzeta
