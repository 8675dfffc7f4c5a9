#include "lamzeta/lamzeta.h"

#include "identities/identities.hpp"
#include "identities/literal.hpp"
#include "identities/registry.hpp"
#include "identities/report.hpp"
#include "lambert/lambert.hpp"
#include "numerics/error.hpp"
#include "oracle/oracle.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <map>
#include <new>
#include <sstream>
#include <string>

struct lz_context {
  lamzeta::PrecisionContext ctx;
};

struct lz_params {
  std::map<std::string, std::string> values;
};

struct lz_report {
  lamzeta::IdentityReport report;
  std::string code;
};

struct lz_eval_result {
  std::string r, s, x_re, x_im;
  lamzeta::LambertResult result;
  int digits = 0;
};

struct lz_oracle_result {
  unsigned N = 1;
  std::int64_t h = 0;
  std::string x;
  lamzeta::BigReal c0;
  lamzeta::BigReal t_max;
  lamzeta::OracleComparison cmp;
  int digits = 0;
};

namespace {

using namespace lamzeta;

struct LastError {
  std::string message;
  std::uint64_t required_terms = 0;
  int achievable_digits = 0;
};

thread_local LastError last_error;

lz_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return LZ_ERR_USAGE;
    case ErrorKind::Constraint: return LZ_ERR_CONSTRAINT;
    case ErrorKind::Domain: return LZ_ERR_DOMAIN;
    case ErrorKind::Budget: return LZ_ERR_BUDGET;
    case ErrorKind::Convergence: return LZ_ERR_CONVERGENCE;
  }
  return LZ_ERR_INTERNAL;
}

template <class F>
lz_status guarded(F&& body) {
  last_error = {};
  try {
    body();
    return LZ_OK;
  } catch (const BudgetExceeded& e) {
    last_error = {e.what(), e.required_terms(), e.achievable_digits()};
    return LZ_ERR_BUDGET;
  } catch (const Error& e) {
    last_error.message = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error.message = "out of memory";
    return LZ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error.message = e.what();
    return LZ_ERR_INTERNAL;
  }
}

lz_status null_argument(const char* what) {
  last_error = {};
  last_error.message = std::string("null argument: ") + what;
  return LZ_ERR_USAGE;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

IdentityId identity_or_throw(const char* name) {
  const auto id = identity_from_cli_name(name);
  if (!id) throw UsageError(std::string("unknown identity '") + name + "'");
  return *id;
}

Rational parse_exponent(const char* text) {
  const PiLiteral lit = parse_pi_literal(text);
  if (lit.pi_power != 0) throw UsageError(std::string("exponent '") + text + "' must be rational");
  return lit.coeff;
}

std::string eval_json(const lz_eval_result& e) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["r"] = e.r;
  j["s"] = e.s;
  j["x"] = {{"re", e.x_re}, {"im", e.x_im}};
  j["value"] = {{"re", to_roundtrip(e.result.value.re())}, {"im", to_roundtrip(e.result.value.im())}};
  j["n_max"] = e.result.truncation.n_max;
  j["tail_bound"] = to_decimal(e.result.truncation.tail_bound, 6);
  j["certified_digits"] = e.result.truncation.certified_digits;
  j["reduced"] = e.result.truncation.reduced;
  j["precision_bits"] = precision_bits(e.result.value.re());
  return j.dump(2);
}

std::string oracle_json(const lz_oracle_result& o) {
  const auto& c = o.cmp;
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["N"] = o.N;
  j["h"] = o.h;
  j["x"] = o.x;
  j["lambert"] = to_roundtrip(c.lambert);
  j["mellin"] = to_roundtrip(c.mellin);
  j["abs_diff"] = to_roundtrip(c.abs_diff);
  j["digits_agreed"] = c.digits_agreed;
  j["target_digits"] = c.target_digits;
  j["achieved"] = c.achieved;
  j["c0"] = to_decimal(o.c0, 10);
  j["t_max"] = to_decimal(o.t_max, 10);
  j["quad_points"] = c.detail.quad_points;
  j["panels"] = c.detail.panels;
  j["quad_error"] = to_decimal(c.detail.quad_error, 6);
  j["tail_bound"] = to_decimal(c.detail.tail_bound, 6);
  j["lambert_terms"] = c.lambert_terms;
  return j.dump(2);
}

}  // namespace

extern "C" {

const char* lz_version(void) { return "1.0.0"; }

const char* lz_status_name(lz_status status) {
  switch (status) {
    case LZ_OK: return "ok";
    case LZ_ERR_USAGE: return "usage error";
    case LZ_ERR_CONSTRAINT: return "constraint violation";
    case LZ_ERR_DOMAIN: return "domain error";
    case LZ_ERR_BUDGET: return "term budget exceeded";
    case LZ_ERR_CONVERGENCE: return "not converged";
    case LZ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lz_last_error(void) { return last_error.message.c_str(); }
uint64_t lz_last_error_required_terms(void) { return last_error.required_terms; }
int lz_last_error_achievable_digits(void) { return last_error.achievable_digits; }

void lz_string_free(char* s) { std::free(s); }

lz_status lz_context_create(lz_context** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new lz_context(); });
}

void lz_context_destroy(lz_context* ctx) { delete ctx; }

lz_status lz_context_set_digits(lz_context* ctx, int digits) {
  if (!ctx) return null_argument("ctx");
  return guarded([&] {
    PrecisionContext next = ctx->ctx;
    next.decimal_digits = digits;
    next.validate();
    ctx->ctx = next;
  });
}

lz_status lz_context_set_guard(lz_context* ctx, int guard_digits) {
  if (!ctx) return null_argument("ctx");
  return guarded([&] {
    PrecisionContext next = ctx->ctx;
    next.guard_digits = guard_digits;
    next.validate();
    ctx->ctx = next;
  });
}

lz_status lz_context_set_max_terms(lz_context* ctx, uint64_t max_terms) {
  if (!ctx) return null_argument("ctx");
  return guarded([&] {
    PrecisionContext next = ctx->ctx;
    next.max_terms = max_terms;
    next.validate();
    ctx->ctx = next;
  });
}

lz_status lz_context_set_allow_reduced(lz_context* ctx, int allow) {
  if (!ctx) return null_argument("ctx");
  ctx->ctx.allow_reduced_target = allow != 0;
  last_error = {};
  return LZ_OK;
}

int lz_context_digits(const lz_context* ctx) { return ctx ? ctx->ctx.decimal_digits : 0; }

size_t lz_identity_count(void) { return all_identities().size(); }

const char* lz_identity_name(size_t index) {
  const auto& ids = all_identities();
  if (index >= ids.size()) return nullptr;
  return identity_cli_name(ids[index]).data();
}

lz_status lz_identity_describe(const char* name, char** out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  return guarded([&] {
    const IdentitySchema& schema = identity_schema(identity_or_throw(name));
    std::ostringstream os;
    os << schema.summary << "\n";
    for (const auto& p : schema.params) {
      os << "  --" << p.name << "  " << p.help << (p.kind == ParamKind::Number ? " (literal)" : "")
         << (p.required ? "" : " [optional]") << "\n";
    }
    if (schema.paired) os << "  give alpha or beta; the other is solved from the constraint\n";
    *out = duplicate(os.str());
  });
}

lz_status lz_params_create(lz_params** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new lz_params(); });
}

void lz_params_destroy(lz_params* params) { delete params; }

lz_status lz_params_set(lz_params* params, const char* key, const char* value) {
  if (!params) return null_argument("params");
  if (!key || !value) return null_argument("key/value");
  return guarded([&] {
    if (params->values.count(key)) throw UsageError(std::string("parameter ") + key + " given twice");
    params->values[key] = value;
  });
}

lz_status lz_verify(const lz_context* ctx, const char* identity, const lz_params* params, lz_report** out) {
  if (!ctx) return null_argument("ctx");
  if (!identity) return null_argument("identity");
  if (!out) return null_argument("out");
  return guarded([&] {
    static const lz_params empty;
    const IdentityId id = identity_or_throw(identity);
    auto* r = new lz_report();
    try {
      r->report = run_identity(id, (params ? params : &empty)->values, ctx->ctx);
      r->code = std::string(identity_code(r->report.id));
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

void lz_report_destroy(lz_report* report) { delete report; }
int lz_report_achieved(const lz_report* report) { return report && report->report.achieved ? 1 : 0; }
int lz_report_digits_agreed(const lz_report* report) { return report ? report->report.digits_agreed : 0; }
int lz_report_target_digits(const lz_report* report) { return report ? report->report.target_digits : 0; }
const char* lz_report_identity(const lz_report* report) { return report ? report->code.c_str() : ""; }

void lz_report_set_elapsed(lz_report* report, double seconds) {
  if (report) report->report.elapsed_s = seconds;
}

lz_status lz_report_format(const lz_report* report, lz_format format, char** out) {
  if (!report) return null_argument("report");
  if (!out) return null_argument("out");
  return guarded([&] {
    switch (format) {
      case LZ_FORMAT_TEXT: *out = duplicate(to_text(report->report)); return;
      case LZ_FORMAT_JSON: *out = duplicate(to_json(report->report) + "\n"); return;
      case LZ_FORMAT_CSV: *out = duplicate(to_csv_row(report->report) + "\n"); return;
    }
    throw UsageError("unknown output format");
  });
}

lz_status lz_report_csv_header(char** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = duplicate(csv_header() + "\n"); });
}

lz_status lz_report_from_json(const char* json, lz_report** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto* r = new lz_report();
    try {
      r->report = report_from_json(json);
      r->code = std::string(identity_code(r->report.id));
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

int lz_report_equal(const lz_report* a, const lz_report* b) {
  if (!a || !b) return 0;
  return a->report == b->report ? 1 : 0;
}

lz_status lz_eval(const lz_context* ctx, const char* r, const char* s, const char* x_re, const char* x_im,
                  lz_eval_result** out) {
  if (!ctx) return null_argument("ctx");
  if (!r || !s || !x_re) return null_argument("r/s/x");
  if (!out) return null_argument("out");
  return guarded([&] {
    PrecisionScope scope(ctx->ctx);
    const BigReal re = parse_pi_literal(x_re).value();
    const BigReal im = x_im ? parse_pi_literal(x_im).value() : BigReal(0);
    SeriesSpec spec{parse_exponent(r), parse_exponent(s), BigComplex(re, im)};
    auto* e = new lz_eval_result();
    e->r = r;
    e->s = s;
    e->x_re = x_re;
    e->x_im = x_im ? x_im : "0";
    e->digits = ctx->ctx.decimal_digits;
    try {
      e->result = lambert_sum(spec, ctx->ctx);
    } catch (...) {
      delete e;
      throw;
    }
    *out = e;
  });
}

void lz_eval_result_destroy(lz_eval_result* result) { delete result; }
uint64_t lz_eval_result_terms(const lz_eval_result* result) { return result ? result->result.truncation.n_max : 0; }
int lz_eval_result_certified_digits(const lz_eval_result* result) {
  return result ? result->result.truncation.certified_digits : 0;
}

lz_status lz_eval_result_format(const lz_eval_result* result, lz_format format, char** out) {
  if (!result) return null_argument("result");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& v = result->result.value;
    const auto& t = result->result.truncation;
    const int shown = std::max(result->digits, 1);
    switch (format) {
      case LZ_FORMAT_TEXT: {
        std::ostringstream os;
        os << "sum n^(" << result->r << ") / (exp(n^(" << result->s << ") x) - 1),  x = " << result->x_re;
        if (result->x_im != "0") os << " + i(" << result->x_im << ")";
        os << "\n  value      " << to_decimal(v.re(), shown);
        if (v.im() != 0) os << "\n  imag       " << to_decimal(v.im(), shown);
        os << "\n  n_max      " << t.n_max << "\n  tail bound " << to_decimal(t.tail_bound, 6)
           << "\n  certified  " << t.certified_digits << " digits" << (t.reduced ? " (reduced by term budget)" : "")
           << "\n";
        *out = duplicate(os.str());
        return;
      }
      case LZ_FORMAT_JSON: *out = duplicate(eval_json(*result) + "\n"); return;
      case LZ_FORMAT_CSV: {
        std::ostringstream os;
        os << "r,s,x_re,x_im,value_re,value_im,n_max,tail_bound,certified_digits,reduced\n"
           << result->r << ',' << result->s << ',' << result->x_re << ',' << result->x_im << ','
           << to_roundtrip(v.re()) << ',' << to_roundtrip(v.im()) << ',' << t.n_max << ','
           << to_decimal(t.tail_bound, 6) << ',' << t.certified_digits << ',' << (t.reduced ? "true" : "false") << "\n";
        *out = duplicate(os.str());
        return;
      }
    }
    throw UsageError("unknown output format");
  });
}

lz_status lz_oracle(const lz_context* ctx, unsigned N, int64_t h, const char* x, const char* t_max, const char* c0,
                    unsigned quad_points, lz_oracle_result** out) {
  if (!ctx) return null_argument("ctx");
  if (!x) return null_argument("x");
  if (!out) return null_argument("out");
  return guarded([&] {
    PrecisionScope scope(ctx->ctx);
    if (N < 1) throw UsageError("N must be at least 1");
    const BigReal xv = parse_pi_literal(x).value();
    ContourSpec spec = default_contour(N, h, xv, ctx->ctx);
    if (c0) spec.c0 = parse_pi_literal(c0).value();
    if (t_max) spec.t_max = parse_pi_literal(t_max).value();
    if (quad_points) spec.quad_points = quad_points;
    auto* o = new lz_oracle_result();
    o->N = N;
    o->h = h;
    o->x = x;
    o->c0 = spec.c0;
    o->t_max = spec.t_max;
    o->digits = ctx->ctx.decimal_digits;
    try {
      o->cmp = oracle_compare(N, h, xv, ctx->ctx, &spec);
    } catch (...) {
      delete o;
      throw;
    }
    *out = o;
  });
}

void lz_oracle_result_destroy(lz_oracle_result* result) { delete result; }
int lz_oracle_result_achieved(const lz_oracle_result* result) { return result && result->cmp.achieved ? 1 : 0; }
int lz_oracle_result_digits_agreed(const lz_oracle_result* result) { return result ? result->cmp.digits_agreed : 0; }

lz_status lz_oracle_result_format(const lz_oracle_result* result, lz_format format, char** out) {
  if (!result) return null_argument("result");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& c = result->cmp;
    const int shown = result->digits + 2;
    switch (format) {
      case LZ_FORMAT_TEXT: {
        std::ostringstream os;
        os << "sum n^(N-2h)/(e^(n^N x)-1) with N = " << result->N << ", h = " << result->h << ", x = " << result->x
           << "\n  direct sum   " << to_decimal(c.lambert, shown) << "  (" << c.lambert_terms << " terms)"
           << "\n  contour      " << to_decimal(c.mellin, shown) << "\n  difference   " << to_decimal(c.abs_diff, 6)
           << "\n  contour      c0 = " << to_decimal(result->c0, 6) << ", t_max = " << to_decimal(result->t_max, 6)
           << ", " << c.detail.panels << " panels x " << c.detail.quad_points << " nodes"
           << "\n  quad error   " << to_decimal(c.detail.quad_error, 3) << ", tail bound "
           << to_decimal(c.detail.tail_bound, 3) << "\n  digits       " << c.digits_agreed << " (target "
           << c.target_digits << ")\n  " << (c.achieved ? "AGREE" : "DISAGREE") << "\n";
        *out = duplicate(os.str());
        return;
      }
      case LZ_FORMAT_JSON: *out = duplicate(oracle_json(*result) + "\n"); return;
      case LZ_FORMAT_CSV: {
        std::ostringstream os;
        os << "N,h,x,lambert,mellin,abs_diff,digits_agreed,target_digits,achieved\n"
           << result->N << ',' << result->h << ',' << result->x << ',' << to_roundtrip(c.lambert) << ','
           << to_roundtrip(c.mellin) << ',' << to_roundtrip(c.abs_diff) << ',' << c.digits_agreed << ','
           << c.target_digits << ',' << (c.achieved ? "true" : "false") << "\n";
        *out = duplicate(os.str());
        return;
      }
    }
    throw UsageError("unknown output format");
  });
}

lz_status lz_zeta_table(const lz_context* ctx, int64_t max_m, unsigned max_N, int verify, lz_format format,
                        char** out, int* all_achieved) {
  if (!ctx) return null_argument("ctx");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto rows = zeta_relation_rows(max_m, max_N);
    PrecisionContext run = ctx->ctx;
    run.allow_reduced_target = true;
    bool all = true;
    std::vector<IdentityReport> reports;
    if (verify) {
      for (const auto& row : rows) {
        reports.push_back(run_identity(IdentityId::ZetaGen,
                                       {{"N", std::to_string(row.N)}, {"m", std::to_string(row.m)}, {"alpha", "pi"},
                                        {"beta", "pi"}},
                                       run));
        all = all && reports.back().achieved;
      }
    }
    if (all_achieved) *all_achieved = all ? 1 : 0;

    std::ostringstream os;
    if (format == LZ_FORMAT_JSON) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        nlohmann::ordered_json j;
        j["m"] = rows[i].m;
        j["N"] = rows[i].N;
        j["low"] = "zeta(" + std::to_string(rows[i].low_arg) + ")";
        j["high"] = "zeta(" + std::to_string(rows[i].high_arg) + ")";
        j["degenerate"] = rows[i].degenerate;
        if (verify) {
          j["digits_agreed"] = reports[i].digits_agreed;
          j["target_digits"] = reports[i].target_digits;
          j["achieved"] = reports[i].achieved;
        }
        arr.push_back(j);
      }
      os << nlohmann::ordered_json{{"schema_version", kReportSchemaVersion}, {"rows", arr}}.dump(2) << "\n";
    } else if (format == LZ_FORMAT_CSV) {
      os << "m,N,low,high,degenerate" << (verify ? ",digits_agreed,target_digits,achieved" : "") << "\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        os << rows[i].m << ',' << rows[i].N << ",zeta(" << rows[i].low_arg << "),zeta(" << rows[i].high_arg << "),"
           << (rows[i].degenerate ? "true" : "false");
        if (verify) {
          os << ',' << reports[i].digits_agreed << ',' << reports[i].target_digits << ','
             << (reports[i].achieved ? "true" : "false");
        }
        os << "\n";
      }
    } else {
      os << std::left << std::setw(4) << "m" << std::setw(4) << "N" << std::setw(12) << "zeta(2m+1)" << std::setw(12)
         << "zeta(2Nm+1)" << (verify ? "  digits" : "") << "\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        os << std::setw(4) << rows[i].m << std::setw(4) << rows[i].N << std::setw(12)
           << ("zeta(" + std::to_string(rows[i].low_arg) + ")") << std::setw(12)
           << ("zeta(" + std::to_string(rows[i].high_arg) + ")");
        if (verify) {
          os << "  " << reports[i].digits_agreed << "/" << reports[i].target_digits
             << (reports[i].achieved ? "" : " NOT ACHIEVED");
        }
        if (rows[i].degenerate) os << "  (0 = 0 at alpha = beta = pi)";
        os << "\n";
      }
    }
    *out = duplicate(os.str());
  });
}

}  // extern "C"
