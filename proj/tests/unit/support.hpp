#pragma once

#include "numerics/bigreal.hpp"

#include <cstdint>
#include <mpfr.h>

namespace lamzeta::testing {

// splitmix64; fixed seeds keep property runs reproducible.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// Number of agreeing significant digits between a and b, relative to the larger.
inline double agreement(const BigReal& a, const BigReal& b) {
  const BigReal diff = boost::multiprecision::abs(a - b);
  if (diff == 0) return 1.0e9;
  BigReal scale = boost::multiprecision::max(boost::multiprecision::abs(a), boost::multiprecision::abs(b));
  if (scale == 0) scale = 1;
  return -log10_abs(diff / scale);
}

inline double agreement(const BigComplex& a, const BigComplex& b) {
  const BigReal diff = abs(a - b);
  if (diff == 0) return 1.0e9;
  BigReal scale = boost::multiprecision::max(abs(a), abs(b));
  if (scale == 0) scale = 1;
  return -log10_abs(diff / scale);
}

// Absolute smallness in decimal digits.
inline double smallness(const BigReal& v) { return v == 0 ? 1.0e9 : -log10_abs(v); }

// MPFR's own implementations, used as independent references.
inline BigReal mpfr_zeta_ref(const BigReal& s) {
  BigReal out = s;
  mpfr_zeta(out.backend().data(), s.backend().data(), MPFR_RNDN);
  return out;
}

inline BigReal mpfr_gamma_ref(const BigReal& s) {
  BigReal out = s;
  mpfr_gamma(out.backend().data(), s.backend().data(), MPFR_RNDN);
  return out;
}

inline BigReal mpfr_euler_ref() {
  BigReal out = 0;
  mpfr_const_euler(out.backend().data(), MPFR_RNDN);
  return out;
}

}  // namespace lamzeta::testing
