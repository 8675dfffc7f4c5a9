#pragma once

#include "numerics/bigreal.hpp"
#include "numerics/precision.hpp"

#include <cstdint>
#include <string>

namespace lamzeta {

/// Majorant for the terms of a series, |t_n| <= C n^p exp(-c n^q), assumed
/// valid for n >= n_valid. All quantities in double; they only steer the
/// choice of cut-off.
struct DecayProfile {
  double log_coeff = 0;  // ln C
  double power = 0;      // p
  double rate = 1;       // c > 0
  double exponent = 1;   // q > 0
  double n_valid = 1;
};

/// Natural log of an upper bound for sum_{n > m} C n^p exp(-c n^q), or
/// +infinity when m is not yet in the region where the bound is known to hold.
double log_tail_bound(const DecayProfile& profile, double m);

/// Smallest cut-off m >= 1 with log_tail_bound(m) <= log_target, searched
/// up to 2^62. Returns 0 if no such m exists in that range.
std::uint64_t smallest_cutoff(const DecayProfile& profile, double log_target);

struct TruncationEstimate {
  std::uint64_t n_max = 0;
  BigReal tail_bound;          // bound on the dropped tail, sum_{n > n_max} |term|
  int certified_digits = 0;    // digits the tail bound guarantees relative to the sum
  bool reduced = false;        // true when the budget forced a lower target
};

/// Picks n_max so the tail is below 10^{-decimal_digits} * e^{log_size}.
/// Over budget this throws BudgetExceeded, or with allow_reduced_target
/// settles for max_terms and reports the digits that still certifies.
/// `what` names the series in error messages.
TruncationEstimate plan_truncation(const DecayProfile& profile, double log_size, const PrecisionContext& ctx,
                                   const std::string& what);

}  // namespace lamzeta
