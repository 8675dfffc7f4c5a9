#include "identities/report.hpp"

#include "numerics/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace lamzeta {
namespace {

struct Names {
  IdentityId id;
  std::string_view code;
  std::string_view cli;
};

constexpr std::array<Names, 16> kNames{{
    {IdentityId::KtyExtended, "KTY_EXTENDED", "kty"},
    {IdentityId::ZetaGen, "ZETA_GEN", "zeta-gen"},
    {IdentityId::EtaGen, "ETA_GEN", "eta-gen"},
    {IdentityId::WigertGen, "WIGERT_GEN", "wigert-gen"},
    {IdentityId::RamanujanOdd, "RAMANUJAN_ODD", "ramanujan-odd"},
    {IdentityId::Lerch, "LERCH", "lerch"},
    {IdentityId::WigertClassic, "WIGERT_CLASSIC", "wigert-classic"},
    {IdentityId::ZetaHalf, "ZETA_HALF", "zeta-half"},
    {IdentityId::RamSpl, "RAM_SPL", "ram-spl"},
    {IdentityId::RamSpl0, "RAM_SPL0", "ram-spl0"},
    {IdentityId::LogDedekind, "LOG_DEDEKIND", "log-dedekind"},
    {IdentityId::CorZ3Z7, "COR_Z3Z7", "cor-z3z7"},
    {IdentityId::CorAbpi, "COR_ABPI", "cor-abpi"},
    {IdentityId::CnCorrected, "CN_CORRECTED", "cn-corrected"},
    {IdentityId::CnErroneous, "CN_ERRONEOUS", "cn-erroneous"},
    {IdentityId::BernoulliSumZero, "BERNOULLI_SUM_ZERO", "bernoulli-sum-zero"},
}};

const Names& names_of(IdentityId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n;
  }
  throw UsageError("unknown identity id");
}

nlohmann::ordered_json big_json(const BigReal& v) { return to_roundtrip(v); }

BigReal big_from_json(const nlohmann::json& j, unsigned bits) { return parse_big(j.get<std::string>(), bits); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view identity_code(IdentityId id) { return names_of(id).code; }
std::string_view identity_cli_name(IdentityId id) { return names_of(id).cli; }

std::optional<IdentityId> identity_from_code(std::string_view code) {
  for (const auto& n : kNames) {
    if (n.code == code) return n.id;
  }
  return std::nullopt;
}

std::optional<IdentityId> identity_from_cli_name(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.cli == name) return n.id;
  }
  return std::nullopt;
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> out;
    for (const auto& n : kNames) out.push_back(n.id);
    return out;
  }();
  return ids;
}

void Side::add(const BigComplex& v) {
  total_ += v;
  const BigReal m = abs(v);
  if (m > scale_) scale_ = m;
}

int default_target_digits(const PrecisionContext& ctx) { return std::max(1, ctx.decimal_digits - 10); }

void finalize_comparison(IdentityReport& report, const BigReal& scale, const PrecisionContext& ctx) {
  report.abs_err = abs(report.lhs - report.rhs);
  BigReal denom = boost::multiprecision::max(abs(report.lhs), abs(report.rhs));
  const BigReal floor_level = scale * boost::multiprecision::pow(BigReal(10), -ctx.decimal_digits);
  if (denom < floor_level) denom = scale;
  if (denom == 0) denom = 1;
  report.rel_err = report.abs_err / denom;
  report.cancelled_digits = scale > denom ? static_cast<int>(std::ceil(log10_abs(scale / denom))) : 0;

  const int cap = ctx.working_digits();
  if (report.rel_err == 0) {
    report.digits_agreed = cap;
  } else {
    const double d = std::floor(-log10_abs(report.rel_err));
    report.digits_agreed = static_cast<int>(std::clamp(d, 0.0, static_cast<double>(cap)));
  }
  const int target = default_target_digits(ctx);
  report.target_digits = report.target_digits > 0 ? std::min(report.target_digits, target) : target;
  report.achieved = report.digits_agreed >= report.target_digits;
}

std::string to_json(const IdentityReport& r, bool pretty) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["id"] = std::string(identity_code(r.id));
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["lhs"] = {{"re", big_json(r.lhs.re())}, {"im", big_json(r.lhs.im())}};
  j["rhs"] = {{"re", big_json(r.rhs.re())}, {"im", big_json(r.rhs.im())}};
  j["abs_err"] = big_json(r.abs_err);
  j["rel_err"] = big_json(r.rel_err);
  j["digits_agreed"] = r.digits_agreed;
  j["target_digits"] = r.target_digits;
  j["achieved"] = r.achieved;
  j["cancelled_digits"] = r.cancelled_digits;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.term_counts) counts[k] = v;
  j["term_counts"] = counts;
  j["elapsed_s"] = r.elapsed_s;
  j["precision_bits"] = precision_bits(r.lhs.re());
  j["notes"] = r.notes;
  return pretty ? j.dump(2) : j.dump();
}

IdentityReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed report JSON: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) throw UsageError("unsupported report schema_version");
    IdentityReport r;
    const auto id = identity_from_code(j.at("id").get<std::string>());
    if (!id) throw UsageError("unknown identity id in report");
    r.id = *id;
    const unsigned bits = j.at("precision_bits").get<unsigned>();
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = v.get<std::string>();
    r.lhs = BigComplex(big_from_json(j.at("lhs").at("re"), bits), big_from_json(j.at("lhs").at("im"), bits));
    r.rhs = BigComplex(big_from_json(j.at("rhs").at("re"), bits), big_from_json(j.at("rhs").at("im"), bits));
    r.abs_err = big_from_json(j.at("abs_err"), bits);
    r.rel_err = big_from_json(j.at("rel_err"), bits);
    r.digits_agreed = j.at("digits_agreed").get<int>();
    r.target_digits = j.at("target_digits").get<int>();
    r.achieved = j.at("achieved").get<bool>();
    r.cancelled_digits = j.value("cancelled_digits", 0);
    for (const auto& [k, v] : j.at("term_counts").items()) r.term_counts[k] = v.get<std::uint64_t>();
    r.elapsed_s = j.at("elapsed_s").get<double>();
    if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("report JSON is missing a field: ") + e.what());
  }
}

std::string csv_header() {
  return "schema_version,id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,digits_agreed,target_digits,"
         "achieved,term_counts,elapsed_s";
}

std::string to_csv_row(const IdentityReport& r) {
  std::string params;
  for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ";") + k + "=" + v;
  std::string counts;
  for (const auto& [k, v] : r.term_counts) counts += (counts.empty() ? "" : ";") + k + "=" + std::to_string(v);
  std::ostringstream os;
  os << kReportSchemaVersion << ',' << identity_code(r.id) << ',' << csv_escape(params) << ','
     << to_roundtrip(r.lhs.re()) << ',' << to_roundtrip(r.lhs.im()) << ',' << to_roundtrip(r.rhs.re()) << ','
     << to_roundtrip(r.rhs.im()) << ',' << to_roundtrip(r.abs_err) << ',' << to_roundtrip(r.rel_err) << ','
     << r.digits_agreed << ',' << r.target_digits << ',' << (r.achieved ? "true" : "false") << ','
     << csv_escape(counts) << ',' << std::setprecision(6) << r.elapsed_s;
  return os.str();
}

std::string to_text(const IdentityReport& r) {
  const int shown = std::max(r.digits_agreed + 5, 20);
  std::ostringstream os;
  os << identity_cli_name(r.id) << " (" << identity_code(r.id) << ")\n";
  for (const auto& [k, v] : r.params) os << "  " << k << " = " << v << "\n";
  auto complex_text = [&](const BigComplex& z) {
    std::string s = to_decimal(z.re(), shown);
    if (z.im() != 0) s += "  (im " + to_decimal(z.im(), 6) + ")";
    return s;
  };
  os << "  lhs     " << complex_text(r.lhs) << "\n";
  os << "  rhs     " << complex_text(r.rhs) << "\n";
  os << "  abs_err " << to_decimal(r.abs_err, 6) << "\n";
  os << "  rel_err " << to_decimal(r.rel_err, 6) << "\n";
  os << "  digits  " << r.digits_agreed << " (target " << r.target_digits << ")\n";
  if (r.cancelled_digits > 0) os << "  cancellation between terms: " << r.cancelled_digits << " digits\n";
  for (const auto& [k, v] : r.term_counts) os << "  terms[" << k << "] = " << v << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  os << "  " << (r.achieved ? "ACHIEVED" : "NOT ACHIEVED") << "  (" << std::fixed << std::setprecision(3)
     << r.elapsed_s << " s)\n";
  return os.str();
}

}  // namespace lamzeta
