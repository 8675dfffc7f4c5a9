#pragma once

#include "numerics/bigreal.hpp"
#include "numerics/precision.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lamzeta {

enum class IdentityId {
  KtyExtended,
  ZetaGen,
  EtaGen,
  WigertGen,
  RamanujanOdd,
  Lerch,
  WigertClassic,
  ZetaHalf,
  RamSpl,
  RamSpl0,
  LogDedekind,
  CorZ3Z7,
  CorAbpi,
  CnCorrected,
  CnErroneous,
  BernoulliSumZero,
};

/// Upper-case identifier used in serialized reports, e.g. "ZETA_GEN".
std::string_view identity_code(IdentityId id);
/// Command-line name, e.g. "zeta-gen".
std::string_view identity_cli_name(IdentityId id);
std::optional<IdentityId> identity_from_code(std::string_view code);
std::optional<IdentityId> identity_from_cli_name(std::string_view name);
const std::vector<IdentityId>& all_identities();

inline constexpr int kReportSchemaVersion = 1;

struct IdentityReport {
  IdentityId id = IdentityId::KtyExtended;
  std::map<std::string, std::string> params;
  BigComplex lhs;
  BigComplex rhs;
  BigReal abs_err;
  BigReal rel_err;
  int digits_agreed = 0;
  int target_digits = 0;
  bool achieved = false;
  /// Digits lost because the sides are much smaller than their largest terms.
  int cancelled_digits = 0;
  std::map<std::string, std::uint64_t> term_counts;
  double elapsed_s = 0;
  std::vector<std::string> notes;

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// Running sum of one side of an identity. Remembers the largest single
/// contribution so that sides which cancel to ~0 are judged against the size
/// of their parts.
class Side {
 public:
  void add(const BigComplex& v);
  void add(const BigReal& v) { add(BigComplex(v)); }
  void sub(const BigComplex& v) { add(-v); }
  void sub(const BigReal& v) { add(BigComplex(-v)); }

  const BigComplex& total() const { return total_; }
  const BigReal& scale() const { return scale_; }

 private:
  BigComplex total_;
  BigReal scale_ = 0;
};

/// Fills the comparison fields of `report` from its lhs and rhs.
///
///   abs_err = |lhs - rhs|
///   rel_err = abs_err / max(|lhs|, |rhs|), or abs_err / scale when both
///             sides are below scale * 10^{-decimal_digits}
///   digits_agreed = floor(-log10 rel_err), capped at the working digits
///   cancelled_digits = ceil(log10(scale / denominator of rel_err))
///   target_digits = decimal_digits - 10 unless already set lower
void finalize_comparison(IdentityReport& report, const BigReal& scale, const PrecisionContext& ctx);

/// Default verdict threshold for a context.
int default_target_digits(const PrecisionContext& ctx);

enum class OutputFormat { Text, Json, Csv };

std::string to_json(const IdentityReport& report, bool pretty = true);
IdentityReport report_from_json(const std::string& text);
std::string csv_header();
std::string to_csv_row(const IdentityReport& report);
std::string to_text(const IdentityReport& report);

}  // namespace lamzeta
