// lamzeta: command-line front end over the lamzeta C API.

#include "lamzeta/lamzeta.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace {

enum Exit { kAchieved = 0, kUsage = 1, kNotAchieved = 2, kBudget = 3 };

struct RunConfig {
  int digits = 30;
  int guard = 15;
  std::uint64_t max_terms = 100000000;
  std::string format;
  std::string output;
  std::uint64_t seed = 0;
  bool no_timing = false;
  bool allow_reduced = false;
};

// Thrown after a failed C call; carries the exit code to use.
struct Failure {
  int code;
};

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using ContextPtr = std::unique_ptr<lz_context, Deleter<lz_context, lz_context_destroy>>;
using ParamsPtr = std::unique_ptr<lz_params, Deleter<lz_params, lz_params_destroy>>;
using ReportPtr = std::unique_ptr<lz_report, Deleter<lz_report, lz_report_destroy>>;
using EvalPtr = std::unique_ptr<lz_eval_result, Deleter<lz_eval_result, lz_eval_result_destroy>>;
using OraclePtr = std::unique_ptr<lz_oracle_result, Deleter<lz_oracle_result, lz_oracle_result_destroy>>;

int exit_code_for(lz_status status) {
  switch (status) {
    case LZ_OK: return kAchieved;
    case LZ_ERR_BUDGET:
    case LZ_ERR_CONVERGENCE: return kBudget;
    default: return kUsage;
  }
}

void check(lz_status status) {
  if (status == LZ_OK) return;
  std::cerr << "error: " << lz_last_error() << "\n";
  if (status == LZ_ERR_BUDGET) {
    std::cerr << "hint: about " << lz_last_error_required_terms() << " terms needed; at most "
              << lz_last_error_achievable_digits()
              << " digits reachable within --max-terms (raise it, or pass --allow-reduced)\n";
  }
  throw Failure{exit_code_for(status)};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  lz_string_free(s);
  return out;
}

lz_format format_of(const RunConfig& cfg) {
  std::string f = cfg.format;
  if (f.empty()) f = (cfg.output.empty() && isatty(STDOUT_FILENO)) ? "text" : "json";
  if (f == "text") return LZ_FORMAT_TEXT;
  if (f == "json") return LZ_FORMAT_JSON;
  return LZ_FORMAT_CSV;
}

ContextPtr make_context(const RunConfig& cfg, int digits) {
  lz_context* raw = nullptr;
  check(lz_context_create(&raw));
  ContextPtr ctx(raw);
  check(lz_context_set_digits(ctx.get(), digits));
  check(lz_context_set_guard(ctx.get(), cfg.guard));
  check(lz_context_set_max_terms(ctx.get(), cfg.max_terms));
  check(lz_context_set_allow_reduced(ctx.get(), cfg.allow_reduced ? 1 : 0));
  return ctx;
}

// Writes next to the target and renames, so readers never see a partial file.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text << std::flush;
    return;
  }
  const std::filesystem::path target(cfg.output);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) {
      std::cerr << "error: cannot write " << tmp << "\n";
      throw Failure{kUsage};
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    std::cerr << "error: cannot move output into place at " << target << "\n";
    throw Failure{kUsage};
  }
}

// "--key value" and "--key=value" pairs left over after CLI11 parsing.
std::vector<std::pair<std::string, std::string>> key_values(const std::vector<std::string>& extras) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& a = extras[i];
    if (a.rfind("--", 0) != 0 || a.size() == 2) {
      std::cerr << "error: unexpected argument '" << a << "' (identity parameters are given as --key value)\n";
      throw Failure{kUsage};
    }
    const auto eq = a.find('=');
    if (eq != std::string::npos) {
      out.emplace_back(a.substr(2, eq - 2), a.substr(eq + 1));
    } else if (i + 1 < extras.size()) {
      out.emplace_back(a.substr(2), extras[++i]);
    } else {
      std::cerr << "error: parameter " << a << " needs a value\n";
      throw Failure{kUsage};
    }
  }
  return out;
}

ReportPtr run_verify(const lz_context* ctx, const std::string& identity,
                     const std::vector<std::pair<std::string, std::string>>& params, bool no_timing) {
  lz_params* raw = nullptr;
  check(lz_params_create(&raw));
  ParamsPtr p(raw);
  for (const auto& [k, v] : params) check(lz_params_set(p.get(), k.c_str(), v.c_str()));
  lz_report* report = nullptr;
  check(lz_verify(ctx, identity.c_str(), p.get(), &report));
  ReportPtr out(report);
  if (no_timing) lz_report_set_elapsed(out.get(), 0.0);
  return out;
}

int cmd_verify(const RunConfig& cfg, const std::string& identity, const std::vector<std::string>& extras) {
  const auto params = key_values(extras);
  const auto ctx = make_context(cfg, cfg.digits);
  const auto report = run_verify(ctx.get(), identity, params, cfg.no_timing);
  const lz_format fmt = format_of(cfg);
  char* s = nullptr;
  std::string text;
  if (fmt == LZ_FORMAT_CSV) {
    check(lz_report_csv_header(&s));
    text = take(s);
  }
  check(lz_report_format(report.get(), fmt, &s));
  text += take(s);
  emit(cfg, text);
  return lz_report_achieved(report.get()) ? kAchieved : kNotAchieved;
}

int cmd_list(const RunConfig& cfg) {
  std::string text;
  for (std::size_t i = 0; i < lz_identity_count(); ++i) {
    char* s = nullptr;
    check(lz_identity_describe(lz_identity_name(i), &s));
    text += std::string(lz_identity_name(i)) + ": " + take(s) + "\n";
  }
  emit(cfg, text);
  return kAchieved;
}

struct EvalArgs {
  std::string r, s, x, x_im;
};

int cmd_eval(const RunConfig& cfg, const EvalArgs& a) {
  const auto ctx = make_context(cfg, cfg.digits);
  lz_eval_result* raw = nullptr;
  check(lz_eval(ctx.get(), a.r.c_str(), a.s.c_str(), a.x.c_str(), a.x_im.empty() ? nullptr : a.x_im.c_str(), &raw));
  EvalPtr result(raw);
  char* s = nullptr;
  check(lz_eval_result_format(result.get(), format_of(cfg), &s));
  emit(cfg, take(s));
  return lz_eval_result_certified_digits(result.get()) >= cfg.digits ? kAchieved : kNotAchieved;
}

struct TableArgs {
  std::string kind = "zeta-relations";
  std::int64_t max_m = 4;
  unsigned max_N = 9;
  bool verify = false;
};

int cmd_table(const RunConfig& cfg, const TableArgs& a) {
  if (a.max_m < 1 || a.max_N < 1) {
    std::cerr << "error: --max-m and --max-N must be at least 1\n";
    return kUsage;
  }
  const auto ctx = make_context(cfg, cfg.digits);
  char* s = nullptr;
  int all = 1;
  check(lz_zeta_table(ctx.get(), a.max_m, a.max_N, a.verify ? 1 : 0, format_of(cfg), &s, &all));
  emit(cfg, take(s));
  return all ? kAchieved : kNotAchieved;
}

struct OracleArgs {
  unsigned N = 1;
  std::int64_t h = 0;
  std::string x = "1";
  std::optional<std::string> t_max;
  std::optional<std::string> c0;
  unsigned quad_points = 0;
};

OraclePtr run_oracle(const lz_context* ctx, const OracleArgs& a) {
  lz_oracle_result* raw = nullptr;
  check(lz_oracle(ctx, a.N, a.h, a.x.c_str(), a.t_max ? a.t_max->c_str() : nullptr, a.c0 ? a.c0->c_str() : nullptr,
                  a.quad_points, &raw));
  return OraclePtr(raw);
}

int cmd_oracle(const RunConfig& cfg, const OracleArgs& a) {
  const auto ctx = make_context(cfg, cfg.digits);
  const auto result = run_oracle(ctx.get(), a);
  char* s = nullptr;
  check(lz_oracle_result_format(result.get(), format_of(cfg), &s));
  emit(cfg, take(s));
  return lz_oracle_result_achieved(result.get()) ? kAchieved : kNotAchieved;
}

// ---------------------------------------------------------------------------
// suite

struct SuiteCase {
  std::string label;
  std::string identity;  // empty for oracle cases
  std::vector<std::pair<std::string, std::string>> params;
  int digits = 40;
  bool expect_achieved = true;
  OracleArgs oracle;
};

std::vector<SuiteCase> suite_cases(std::uint64_t seed) {
  std::vector<SuiteCase> cases;
  auto add = [&](std::string identity, std::vector<std::pair<std::string, std::string>> params, int digits,
                 bool expect = true) {
    std::string label = identity;
    for (const auto& [k, v] : params) label += " " + k + "=" + v;
    cases.push_back({label, std::move(identity), std::move(params), digits, expect, {}});
  };

  add("zeta-half", {{"alpha", "pi^3"}, {"beta", "4"}}, 50);
  add("zeta-half", {{"alpha", "2pi^3"}}, 50);
  for (unsigned N = 1; N <= 3; ++N) {
    for (int h = -2; h <= 3; ++h) {
      if (static_cast<int>(N) - 2 * h == -1) continue;
      for (const char* x : {"1/2", "1", "2pi"}) {
        add("kty", {{"N", std::to_string(N)}, {"h", std::to_string(h)}, {"x", x}}, 40);
      }
    }
  }
  for (int m : {1, -1, 2, -2, 3}) add("zeta-gen", {{"N", "1"}, {"m", std::to_string(m)}, {"alpha", "pi"}}, 40);
  add("zeta-gen", {{"N", "1"}, {"m", "1"}, {"alpha", "2pi"}}, 40);
  for (int m : {1, -1}) add("zeta-gen", {{"N", "3"}, {"m", std::to_string(m)}, {"alpha", "pi"}}, 40);
  add("zeta-gen", {{"N", "3"}, {"m", "1"}, {"alpha", "2pi"}}, 40);
  add("zeta-gen", {{"N", "5"}, {"m", "1"}, {"alpha", "pi"}}, 20);
  add("cor-z3z7", {{"alpha", "pi"}}, 40);
  add("cor-abpi", {{"alpha", "pi"}}, 40);
  add("log-dedekind", {{"alpha", "pi"}}, 40);
  add("log-dedekind", {{"alpha", "2pi"}}, 40);
  add("eta-gen", {{"N", "3"}, {"alpha", "pi"}}, 35);
  for (int m : {0, 1, -1}) add("wigert-gen", {{"N", "2"}, {"m", std::to_string(m)}, {"alpha", "pi"}}, 35);
  add("wigert-classic", {{"N", "2"}, {"x", "4pi"}}, 35);
  add("lerch", {{"N", "1"}, {"m", "1"}}, 50);
  for (int m = 2; m <= 20; m += 2) add("bernoulli-sum-zero", {{"m", std::to_string(m)}}, 30);
  for (const char* m : {"1", "2"}) {
    for (const char* y : {"1", "2pi"}) add("cn-corrected", {{"m", m}, {"y", y}}, 35);
  }
  add("cn-erroneous", {{"m", "1"}, {"y", "2pi"}}, 30, false);

  for (auto [N, h, x] : {std::tuple{1u, 0, "1"}, {1u, 2, "2"}, {2u, 1, "2"}, {3u, 2, "1"}}) {
    SuiteCase c;
    c.label = "oracle N=" + std::to_string(N) + " h=" + std::to_string(h) + " x=" + x;
    c.digits = 20;
    c.oracle.N = N;
    c.oracle.h = h;
    c.oracle.x = x;
    cases.push_back(c);
  }

  // Seeded admissible pairs: alpha = (a/b) pi with the partner solved.
  std::mt19937_64 rng(seed);
  for (const char* id : {"ramanujan-odd", "log-dedekind", "ram-spl0"}) {
    const std::uint64_t a = 1 + rng() % 7;
    const std::uint64_t b = 1 + rng() % 7;
    std::vector<std::pair<std::string, std::string>> params;
    if (std::string(id) == "ramanujan-odd") params.emplace_back("m", "1");
    params.emplace_back("alpha", std::to_string(a) + "/" + std::to_string(b) + "pi");
    add(id, params, 40);
  }
  return cases;
}

int cmd_suite(const RunConfig& cfg) {
  const lz_format fmt = format_of(cfg);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::string text;
  std::string csv = "label,achieved,expected,digits_agreed,target_digits,status\n";
  int failures = 0;
  int worst = kAchieved;

  for (const auto& c : suite_cases(cfg.seed)) {
    const auto start = std::chrono::steady_clock::now();
    bool achieved = false;
    int digits = 0;
    int target = 0;
    std::string status = "ok";
    nlohmann::ordered_json detail;
    try {
      const auto ctx = make_context(cfg, c.digits);
      char* s = nullptr;
      if (c.identity.empty()) {
        const auto result = run_oracle(ctx.get(), c.oracle);
        achieved = lz_oracle_result_achieved(result.get());
        digits = lz_oracle_result_digits_agreed(result.get());
        target = c.digits - 5;
        check(lz_oracle_result_format(result.get(), LZ_FORMAT_JSON, &s));
      } else {
        const auto report = run_verify(ctx.get(), c.identity, c.params, cfg.no_timing);
        achieved = lz_report_achieved(report.get());
        digits = lz_report_digits_agreed(report.get());
        target = lz_report_target_digits(report.get());
        check(lz_report_format(report.get(), LZ_FORMAT_JSON, &s));
      }
      detail = nlohmann::ordered_json::parse(take(s));
    } catch (const Failure& f) {
      status = lz_last_error();
      worst = std::max(worst, f.code);
    }
    const double secs =
        cfg.no_timing ? 0.0 : std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = status == "ok" && achieved == c.expect_achieved;
    if (!pass) ++failures;

    char line[64];
    std::snprintf(line, sizeof line, " %3d/%-3d %8.2fs  ", digits, target, secs);
    text += std::string(pass ? "PASS" : "FAIL") + line + c.label + (c.expect_achieved ? "" : " (expected mismatch)") +
            (status == "ok" ? "" : "  [" + status + "]") + "\n";
    csv += "\"" + c.label + "\"," + (achieved ? "true" : "false") + "," + (c.expect_achieved ? "true" : "false") + "," +
           std::to_string(digits) + "," + std::to_string(target) + ",\"" + status + "\"\n";
    nlohmann::ordered_json row;
    row["label"] = c.label;
    row["pass"] = pass;
    row["expected_achieved"] = c.expect_achieved;
    row["status"] = status;
    row["result"] = detail;
    rows.push_back(row);
  }

  if (fmt == LZ_FORMAT_JSON) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["seed"] = cfg.seed;
    doc["failures"] = failures;
    doc["cases"] = rows;
    emit(cfg, doc.dump(2) + "\n");
  } else if (fmt == LZ_FORMAT_CSV) {
    emit(cfg, csv);
  } else {
    emit(cfg, text + std::to_string(failures) + " failing case(s)\n");
  }
  if (worst != kAchieved) return worst;
  return failures == 0 ? kAchieved : kNotAchieved;
}

void add_run_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--digits", cfg.digits, "Target decimal digits")->check(CLI::Range(4, 100000));
  app->add_option("--guard", cfg.guard, "Extra working digits")->check(CLI::NonNegativeNumber);
  app->add_option("--max-terms", cfg.max_terms, "Term budget per series")->check(CLI::PositiveNumber);
  app->add_option("--format", cfg.format, "Output format (default: text on a terminal, json otherwise)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_option("--output", cfg.output, "Write output to this file");
  app->add_option("--seed", cfg.seed, "Seed for randomized parameter choices");
  app->add_flag("--no-timing", cfg.no_timing, "Report elapsed_s as 0 so output is byte-reproducible");
  app->add_flag("--allow-reduced", cfg.allow_reduced,
                "Lower the target to the digits the term budget can certify instead of failing");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision Lambert series and zeta identity verification"};
  app.set_version_flag("--version", lz_version());
  app.require_subcommand(1);

  RunConfig cfg;
  add_run_options(&app, cfg);

  auto* verify = app.add_subcommand("verify", "Check one identity numerically");
  verify->set_help_flag("--help", "Print this help message and exit");
  std::string identity;
  bool list = false;
  verify->add_option("identity", identity, "Identity name (see --list)");
  verify->add_flag("--list", list, "List identities and their parameters");
  verify->allow_extras();
  verify->positionals_at_end(false);
  add_run_options(verify, cfg);

  auto* eval = app.add_subcommand("eval", "Evaluate sum n^r / (exp(n^s x) - 1)");
  EvalArgs eval_args;
  eval->add_option("--r", eval_args.r, "Exponent r (integer, decimal or a/b)")->required();
  eval->add_option("--s", eval_args.s, "Exponent s > 0")->required();
  eval->add_option("--x", eval_args.x, "Real part of x, e.g. 2pi")->required();
  eval->add_option("--x-im", eval_args.x_im, "Imaginary part of x");
  add_run_options(eval, cfg);

  auto* table = app.add_subcommand("table", "Odd zeta values related by the generalized formula");
  TableArgs table_args;
  table->add_option("kind", table_args.kind, "Table kind")->check(CLI::IsMember({"zeta-relations"}));
  table->add_option("--max-m", table_args.max_m, "Largest m");
  table->add_option("--max-N", table_args.max_N, "Largest N");
  table->add_flag("--verify", table_args.verify, "Check each row at alpha = beta = pi");
  add_run_options(table, cfg);

  auto* oracle = app.add_subcommand("oracle", "Compare a Lambert sum with its contour integral");
  oracle->set_help_flag("--help", "Print this help message and exit");
  OracleArgs oracle_args;
  oracle->add_option("--N", oracle_args.N, "Exponent N >= 1")->check(CLI::Range(1u, 1000u));
  oracle->add_option("--h", oracle_args.h, "Shift h");
  oracle->add_option("--x", oracle_args.x, "Argument x > 0");
  oracle->add_option("--t-max", oracle_args.t_max, "Truncation height of the contour");
  oracle->add_option("--c0", oracle_args.c0, "Abscissa of the contour");
  oracle->add_option("--quad-points", oracle_args.quad_points, "Initial Gauss-Legendre nodes per panel");
  add_run_options(oracle, cfg);

  auto* suite = app.add_subcommand("suite", "Run the full verification grid");
  add_run_options(suite, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  const bool oracle_digits_default = oracle->parsed() && app.count("--digits") == 0 && oracle->count("--digits") == 0;
  if (oracle_digits_default) cfg.digits = 20;
  const bool table_defaults = table->parsed() && app.count("--digits") == 0 && table->count("--digits") == 0;
  if (table_defaults) cfg.digits = 20;
  // Large-N rows converge like exp(-c n^(1/N)); keep --verify bounded unless a budget is given.
  if (table->parsed() && app.count("--max-terms") == 0 && table->count("--max-terms") == 0) cfg.max_terms = 100000;

  try {
    if (verify->parsed()) {
      if (list) return cmd_list(cfg);
      if (identity.empty()) {
        std::cerr << "error: verify needs an identity name (try verify --list)\n";
        return kUsage;
      }
      return cmd_verify(cfg, identity, verify->remaining());
    }
    if (eval->parsed()) return cmd_eval(cfg, eval_args);
    if (table->parsed()) return cmd_table(cfg, table_args);
    if (oracle->parsed()) return cmd_oracle(cfg, oracle_args);
    if (suite->parsed()) return cmd_suite(cfg);
  } catch (const Failure& f) {
    return f.code;
  }
  return kUsage;
}
