#include "identities/registry.hpp"

#include "identities/builder.hpp"

#include "identities/identities.hpp"
#include "identities/literal.hpp"
#include "numerics/error.hpp"
#include "oracle/oracle.hpp"

#include <charconv>

namespace lamzeta {
namespace {

ParamSpec integer(const char* name, const char* help) { return {name, ParamKind::Integer, true, help}; }
ParamSpec number(const char* name, const char* help, bool required = true) {
  return {name, ParamKind::Number, required, help};
}

std::vector<ParamSpec> pair_params(std::vector<ParamSpec> head = {}) {
  head.push_back(number("alpha", "alpha > 0", false));
  head.push_back(number("beta", "beta > 0", false));
  return head;
}

const std::vector<IdentitySchema>& schemas() {
  static const std::vector<IdentitySchema> all = {
      {IdentityId::KtyExtended, "sum n^{N-2h}/(e^{n^N x}-1) = P1(x) + S(x)",
       {integer("N", "N >= 1"), integer("h", "any integer"), number("x", "x > 0")}},
      {IdentityId::ZetaGen, "relation between zeta(2m+1) and zeta(2Nm+1), N odd, alpha*beta^N = pi^(N+1)",
       pair_params({integer("N", "odd N >= 1"), integer("m", "m != 0")}), true},
      {IdentityId::EtaGen, "log-eta type transformation, N odd, alpha*beta^N = pi^(N+1)",
       pair_params({integer("N", "odd N >= 1")}), true},
      {IdentityId::WigertGen, "even-N transformation with zeta(2m+1-1/N), alpha*beta^N = pi^(N+1)",
       pair_params({integer("N", "even N >= 2"), integer("m", "any integer")}), true},
      {IdentityId::RamanujanOdd, "Ramanujan's formula for zeta(2m+1), alpha*beta = pi^2",
       pair_params({integer("m", "m != 0")}), true},
      {IdentityId::Lerch, "alpha = beta = pi case: zeta values against a polynomial in pi",
       {integer("N", "odd N >= 1"), integer("m", "m >= 1")}},
      {IdentityId::WigertClassic, "Wigert's formula for zeta(1/N), N even",
       {integer("N", "even N >= 2"), number("x", "x > 0")}},
      {IdentityId::ZetaHalf, "Ramanujan's formula for zeta(1/2), alpha*beta = 4 pi^3", pair_params(), true},
      {IdentityId::RamSpl, "sum n^{2m-1}/(e^{2 alpha n}-1) transformation, alpha*beta = pi^2",
       pair_params({integer("m", "m >= 2")}), true},
      {IdentityId::RamSpl0, "sum n/(e^{2 alpha n}-1) transformation, alpha*beta = pi^2", pair_params(), true},
      {IdentityId::LogDedekind, "log Dedekind eta transformation, alpha*beta = pi^2", pair_params(), true},
      {IdentityId::CorZ3Z7, "zeta(3) and zeta(7) with cube-root-of-unity sums, alpha*beta^3 = pi^4", pair_params(),
       true},
      {IdentityId::CorAbpi, "N = 3 log-eta type relation with Euler's constant, alpha*beta^3 = pi^4", pair_params(),
       true},
      {IdentityId::CnCorrected, "divisor-sum identity with the full residue sum",
       {integer("m", "m >= 1"), number("y", "y > 0")}},
      {IdentityId::CnErroneous, "divisor-sum identity with only the s = 0 residue (fails)",
       {integer("m", "m >= 1"), number("y", "y > 0")}},
      {IdentityId::BernoulliSumZero, "exact Bernoulli sum, zero for even m", {integer("m", "m >= 0")}},
  };
  return all;
}

std::int64_t parse_integer(const std::string& key, const std::string& text) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("parameter " + key + " must be an integer, got '" + text + "'");
  return v;
}

unsigned parse_N(const std::map<std::string, std::string>& p) {
  const std::int64_t n = parse_integer("N", p.at("N"));
  if (n < 1 || n > 1000) throw ConstraintError("N must be between 1 and 1000");
  return static_cast<unsigned>(n);
}

}  // namespace

const IdentitySchema& identity_schema(IdentityId id) {
  for (const auto& s : schemas()) {
    if (s.id == id) return s;
  }
  throw UsageError("unknown identity");
}

IdentityReport run_identity(IdentityId id, const std::map<std::string, std::string>& params,
                            const PrecisionContext& ctx) {
  ctx.validate();
  const IdentitySchema& schema = identity_schema(id);
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const auto& spec : schema.params) known = known || spec.name == key;
    if (!known) throw UsageError("unknown parameter '" + key + "' for " + std::string(identity_cli_name(id)));
    if (value.empty()) throw UsageError("parameter " + key + " is empty");
  }
  for (const auto& spec : schema.params) {
    if (spec.required && !params.count(spec.name)) {
      throw UsageError("missing parameter " + spec.name + " for " + std::string(identity_cli_name(id)));
    }
  }

  auto once = [&](const PrecisionContext& ctx) -> IdentityReport {
    PrecisionScope scope(ctx);
    auto integer_param = [&](const char* key) { return parse_integer(key, params.at(key)); };
    auto number_param = [&](const char* key) { return parse_pi_literal(params.at(key)).value(); };

    BigReal alpha, beta;
    if (schema.paired) {
      const unsigned n = params.count("N") ? parse_N(params) : 1;
      const PairConstraint c = constraint_for(id, n);
      const bool has_a = params.count("alpha") != 0;
      const bool has_b = params.count("beta") != 0;
      if (!has_a && !has_b) throw UsageError("give alpha or beta (the other is solved from " + c.describe() + ")");
      if (has_a) alpha = number_param("alpha");
      if (has_b) beta = number_param("beta");
      if (!has_b) beta = c.solve_beta(alpha);
      if (!has_a) alpha = c.solve_alpha(beta);
      if (has_a && has_b) c.check(alpha, beta);
    }

    switch (id) {
      case IdentityId::KtyExtended:
        return verify_kty_extended(parse_N(params), integer_param("h"), number_param("x"), ctx);
      case IdentityId::ZetaGen:
        return verify_zeta_gen(parse_N(params), integer_param("m"), alpha, beta, ctx);
      case IdentityId::EtaGen:
        return verify_eta_gen(parse_N(params), alpha, beta, ctx);
      case IdentityId::WigertGen:
        return verify_wigert_gen(parse_N(params), integer_param("m"), alpha, beta, ctx);
      case IdentityId::RamanujanOdd:
        return verify_ramanujan_odd(integer_param("m"), alpha, beta, ctx);
      case IdentityId::Lerch:
        return verify_lerch_gen(parse_N(params), integer_param("m"), ctx);
      case IdentityId::WigertClassic:
        return verify_wigert_classic(parse_N(params), number_param("x"), ctx);
      case IdentityId::ZetaHalf:
        return verify_zeta_half(alpha, beta, ctx);
      case IdentityId::RamSpl:
        return verify_ram_spl(integer_param("m"), alpha, beta, ctx);
      case IdentityId::RamSpl0:
        return verify_ram_spl0(alpha, beta, ctx);
      case IdentityId::LogDedekind:
        return verify_log_dedekind(alpha, beta, ctx);
      case IdentityId::CorZ3Z7:
        return verify_cor_z3z7(alpha, beta, ctx);
      case IdentityId::CorAbpi:
        return verify_cor_abpi(alpha, beta, ctx);
      case IdentityId::CnCorrected:
        return cn_corrected(integer_param("m"), number_param("y"), ctx);
      case IdentityId::CnErroneous:
        return cn_erroneous_demo(integer_param("m"), number_param("y"), ctx);
      case IdentityId::BernoulliSumZero:
        return verify_bernoulli_sum_zero(integer_param("m"), ctx);
    }
    throw UsageError("unknown identity");
  };

  IdentityReport report = once(ctx);
  // Sides built from large terms that cancel lose digits the per-series
  // truncation did not plan for. One rerun with that many extra digits
  // recovers them when the term budget was not the limit.
  if (!report.achieved && report.cancelled_digits > 0 && !detail::hit_term_budget(report)) {
    PrecisionContext wider = ctx;
    wider.decimal_digits += report.cancelled_digits + 2;
    const int target = report.target_digits;
    const double first_elapsed = report.elapsed_s;
    try {
      report = once(wider);
    } catch (const BudgetExceeded&) {
      report.notes.push_back("cancellation between terms costs " + std::to_string(report.cancelled_digits) +
                             " digits; recovering them needs more than max_terms");
      return report;
    }
    report.target_digits = std::min(report.target_digits, target);
    report.achieved = report.digits_agreed >= report.target_digits;
    report.elapsed_s += first_elapsed;
    report.notes.push_back("rerun with " + std::to_string(wider.decimal_digits - ctx.decimal_digits) +
                           " extra digits to absorb cancellation between terms");
  }
  return report;
}

}  // namespace lamzeta
