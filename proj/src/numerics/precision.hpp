#pragma once

#include <cstdint>

namespace lamzeta {

/// Accuracy contract shared by every numeric operation.
///
/// Values are computed at `working_digits()` and are expected to be correct to
/// `decimal_digits` significant digits. `max_terms` caps any single series
/// loop. When `allow_reduced_target` is set, a series that cannot reach the
/// requested accuracy inside the budget is summed up to the cap and reports
/// the digits it could certify instead of failing.
struct PrecisionContext {
  int decimal_digits = 30;
  int guard_digits = 15;
  std::uint64_t max_terms = 100'000'000;
  bool allow_reduced_target = false;

  int working_digits() const noexcept { return decimal_digits + guard_digits; }

  /// Throws UsageError when a field is out of range.
  void validate() const;

  static PrecisionContext with_digits(int digits) {
    PrecisionContext ctx;
    ctx.decimal_digits = digits;
    return ctx;
  }
};

/// Sets the default MPFR precision for newly created BigReal values for the
/// lifetime of the scope, restoring the previous default afterwards.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionContext& ctx);
  explicit PrecisionScope(int digits10);
  ~PrecisionScope();

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

}  // namespace lamzeta
