#include "doctest.h"

#include "identities/identities.hpp"
#include "identities/literal.hpp"
#include "identities/registry.hpp"
#include "identities/report.hpp"
#include "numerics/error.hpp"
#include "numerics/zeta.hpp"
#include "support.hpp"

#include <map>
#include <string>

using namespace lamzeta;
using lamzeta::testing::agreement;
using lamzeta::testing::SplitMix;

namespace {

using Params = std::map<std::string, std::string>;

PrecisionContext ctx_with(int digits) { return PrecisionContext::with_digits(digits); }

}  // namespace

TEST_CASE("pi literals") {
  const auto ctx = ctx_with(30);
  PrecisionScope scope(ctx);
  CHECK(parse_pi_literal("pi") == PiLiteral{1, 1});
  CHECK(parse_pi_literal("2pi") == PiLiteral{2, 1});
  CHECK(parse_pi_literal("pi^4") == PiLiteral{1, 4});
  CHECK(parse_pi_literal("pi^3/4") == PiLiteral{Rational(1, 4), 3});
  CHECK(parse_pi_literal("4*pi^(3/2)") == PiLiteral{4, Rational(3, 2)});
  CHECK(parse_pi_literal("3/4pi") == PiLiteral{Rational(3, 4), 1});
  CHECK(parse_pi_literal("-0.75") == PiLiteral{Rational(-3, 4), 0});
  CHECK(parse_pi_literal("pi^-1") == PiLiteral{1, -1});
  CHECK(parse_pi_literal("(pi/2)") == PiLiteral{Rational(1, 2), 1});
  CHECK(parse_pi_literal(" 1/2 ") == PiLiteral{Rational(1, 2), 0});
  CHECK(agreement(parse_pi_literal("pi^3/4").value(), boost::multiprecision::pow(pi_value(), 3) / 4) > 29);
  for (const char* bad : {"", "p", "2pi^", "1/0", "pi pi^", "(pi", "2..5", "1e5x", "--1"}) {
    CHECK_THROWS_AS(parse_pi_literal(bad), UsageError);
  }
}

TEST_CASE("property: pi literal round trip through to_string") {
  SplitMix rng(8201);
  for (int i = 0; i < 100; ++i) {
    const PiLiteral lit{Rational(rng.integer(-50, 50), rng.integer(1, 30)), Rational(rng.integer(-6, 6), rng.integer(1, 3))};
    CHECK(parse_pi_literal(lit.to_string()) == lit);
  }
}

TEST_CASE("identity names are unique and invertible") {
  for (IdentityId id : all_identities()) {
    CHECK(identity_from_code(identity_code(id)) == id);
    CHECK(identity_from_cli_name(identity_cli_name(id)) == id);
  }
  CHECK_FALSE(identity_from_cli_name("nope").has_value());
}

TEST_CASE("report JSON round trip") {
  const auto ctx = ctx_with(30);
  for (const auto& [id, params] : {std::pair{IdentityId::ZetaGen, Params{{"N", "3"}, {"m", "1"}, {"alpha", "pi"}}},
                                   std::pair{IdentityId::CnErroneous, Params{{"m", "1"}, {"y", "2pi"}}},
                                   std::pair{IdentityId::BernoulliSumZero, Params{{"m", "4"}}},
                                   std::pair{IdentityId::CorAbpi, Params{{"alpha", "pi"}}}}) {
    const IdentityReport r = run_identity(id, params, ctx);
    const std::string json = to_json(r);
    const IdentityReport back = report_from_json(json);
    CHECK(back == r);
    CHECK(to_json(back) == json);
    CHECK(to_json(report_from_json(to_json(r, false)), false) == to_json(r, false));
  }
  CHECK_THROWS_AS(report_from_json("{}"), UsageError);
  CHECK_THROWS_AS(report_from_json("not json"), UsageError);
}

TEST_CASE("csv row has one field per header column") {
  const auto ctx = ctx_with(20);
  const IdentityReport r = run_identity(IdentityId::ZetaGen, {{"N", "1"}, {"m", "2"}, {"alpha", "pi"}}, ctx);
  auto count = [](const std::string& s) {
    int commas = 0;
    for (char c : s) commas += c == ',';
    return commas;
  };
  CHECK(count(csv_header()) == count(to_csv_row(r)));
}

TEST_CASE("registry rejects bad parameters") {
  const auto ctx = ctx_with(20);
  CHECK_THROWS_AS(run_identity(IdentityId::ZetaGen, {{"N", "2"}, {"m", "1"}, {"alpha", "pi"}}, ctx), ConstraintError);
  CHECK_THROWS_WITH(run_identity(IdentityId::ZetaGen, {{"N", "2"}, {"m", "1"}, {"alpha", "pi"}}, ctx),
                    doctest::Contains("N must be odd"));
  CHECK_THROWS_AS(run_identity(IdentityId::WigertGen, {{"N", "3"}, {"m", "1"}, {"alpha", "pi"}}, ctx), ConstraintError);
  CHECK_THROWS_AS(run_identity(IdentityId::ZetaGen, {{"N", "3"}, {"m", "0"}, {"alpha", "pi"}}, ctx), ConstraintError);
  CHECK_THROWS_AS(run_identity(IdentityId::ZetaGen, {{"N", "3"}, {"m", "1"}}, ctx), UsageError);
  CHECK_THROWS_AS(run_identity(IdentityId::ZetaGen, {{"N", "3"}, {"alpha", "pi"}}, ctx), UsageError);
  CHECK_THROWS_AS(run_identity(IdentityId::ZetaGen, {{"N", "3"}, {"m", "1"}, {"alpha", "pi"}, {"gamma", "1"}}, ctx),
                  UsageError);
  CHECK_THROWS_AS(run_identity(IdentityId::ZetaGen, {{"N", "x"}, {"m", "1"}, {"alpha", "pi"}}, ctx), UsageError);
  CHECK_THROWS_AS(run_identity(IdentityId::ZetaGen, {{"N", "0"}, {"m", "1"}, {"alpha", "pi"}}, ctx), ConstraintError);
  CHECK_THROWS_AS(run_identity(IdentityId::ZetaGen, {{"N", "3"}, {"m", "1"}, {"alpha", "-pi"}}, ctx), ConstraintError);
  // Both given and inconsistent.
  CHECK_THROWS_AS(run_identity(IdentityId::ZetaGen, {{"N", "3"}, {"m", "1"}, {"alpha", "pi"}, {"beta", "2pi"}}, ctx),
                  ConstraintError);
  // Both given and consistent in exact form.
  CHECK(run_identity(IdentityId::RamanujanOdd, {{"m", "1"}, {"alpha", "2pi"}, {"beta", "pi/2"}}, ctx).achieved);
  CHECK(run_identity(IdentityId::ZetaHalf, {{"alpha", "pi^3"}, {"beta", "4"}}, ctx).achieved);
  CHECK_THROWS_AS(run_identity(IdentityId::CnCorrected, {{"m", "1"}, {"y", "0"}}, ctx), ConstraintError);
}

TEST_CASE("solved partner satisfies the constraint") {
  const auto ctx = ctx_with(30);
  PrecisionScope scope(ctx);
  SplitMix rng(8202);
  for (unsigned N : {1u, 3u, 5u}) {
    const PairConstraint c = constraint_for(IdentityId::ZetaGen, N);
    for (int i = 0; i < 10; ++i) {
      const BigReal alpha(rng.uniform(0.2, 8.0));
      const BigReal beta = c.solve_beta(alpha);
      CHECK_NOTHROW(c.check(alpha, beta));
      CHECK(agreement(c.solve_alpha(beta), alpha) > 28);
    }
  }
}

TEST_CASE("generalized formula at N = 1 reduces to the classical odd zeta formula") {
  const auto ctx = ctx_with(30);
  PrecisionScope scope(ctx);
  const BigReal pi = pi_value();
  for (std::int64_t m : {1, 2, 3, -1, -2}) {
    for (const BigReal& alpha : {pi, BigReal(2 * pi), BigReal(pi / 3)}) {
      const BigReal beta = pi * pi / alpha;
      const IdentityReport gen = verify_zeta_gen(1, m, alpha, beta, ctx);
      const IdentityReport classic = verify_ramanujan_odd(m, alpha, beta, ctx);
      CHECK_MESSAGE(gen.achieved, "m=" << m);
      CHECK_MESSAGE(classic.achieved, "m=" << m);
      const BigReal scale = boost::multiprecision::max(BigReal(1), abs(classic.lhs));
      CHECK_MESSAGE(-log10_abs(abs(gen.lhs - classic.lhs) / scale) > 28, "m=" << m);
    }
  }
}

TEST_CASE("generalized formula at asymmetric pairs") {
  const auto ctx = ctx_with(30);
  PrecisionScope scope(ctx);
  const BigReal pi = pi_value();
  for (unsigned N : {1u, 3u}) {
    const PairConstraint c = constraint_for(IdentityId::ZetaGen, N);
    for (const BigReal& alpha : {BigReal(pi / 2), BigReal(3 * pi / 2), BigReal(5)}) {
      const IdentityReport r = verify_zeta_gen(N, 1, alpha, c.solve_beta(alpha), ctx);
      CHECK_MESSAGE(r.achieved, "N=" << N << " alpha=" << alpha);
      CHECK(r.digits_agreed >= 25);
    }
  }
}

TEST_CASE("symmetrized sides are real") {
  const auto ctx = ctx_with(30);
  PrecisionScope scope(ctx);
  const BigReal pi = pi_value();
  const BigReal tiny = boost::multiprecision::pow(BigReal(10), -(ctx.working_digits() - 5));
  auto real = [&](const IdentityReport& r) {
    return abs(r.lhs.im()) <= tiny * (1 + abs(r.lhs)) && abs(r.rhs.im()) <= tiny * (1 + abs(r.rhs));
  };
  CHECK(real(verify_zeta_gen(3, 1, pi, pi, ctx)));
  CHECK(real(verify_zeta_gen(3, -1, pi, pi, ctx)));
  CHECK(real(verify_eta_gen(3, pi, pi, ctx)));
  CHECK(real(verify_wigert_gen(2, 1, pi, pi, ctx)));
  CHECK(real(verify_cor_z3z7(pi, pi, ctx)));
  CHECK(real(verify_cor_abpi(pi, pi, ctx)));
  CHECK(real(verify_kty_extended(3, 1, BigReal(1), ctx)));
}

TEST_CASE("classical identities") {
  const auto ctx = ctx_with(30);
  PrecisionScope scope(ctx);
  const BigReal pi = pi_value();
  CHECK(verify_log_dedekind(pi, pi, ctx).achieved);
  CHECK(verify_log_dedekind(2 * pi, pi / 2, ctx).achieved);
  CHECK(verify_ram_spl0(pi, pi, ctx).achieved);
  CHECK(verify_ram_spl(2, pi, pi, ctx).achieved);
  CHECK(verify_ram_spl(3, pi / 2, 2 * pi, ctx).achieved);
  CHECK_THROWS_AS(verify_ram_spl(1, pi, pi, ctx), ConstraintError);
  CHECK(verify_wigert_classic(2, BigReal(1), ctx).achieved);
  CHECK(verify_lerch_gen(1, 1, ctx).achieved);
  CHECK(verify_lerch_gen(3, 1, ctx).achieved);
}

TEST_CASE("lerch right side at N = 1, m = 1 is 7 pi^3 / 90") {
  const auto terms = lerch_rhs_polynomial(1, 1);
  Rational cubic = 0;
  for (const auto& t : terms) {
    if (t.pi_power == 3) cubic += t.coeff;
    else CHECK(t.coeff == 0);
  }
  CHECK(cubic == Rational(7, 90));
}

TEST_CASE("bernoulli sum is exactly zero for even m") {
  for (std::int64_t m = 2; m <= 20; m += 2) CHECK_MESSAGE(bernoulli_sum_zero(m) == 0, "m=" << m);
  CHECK(bernoulli_sum_zero(1) == Rational(-7, 720));
  CHECK(bernoulli_sum_zero(3) != 0);
  const auto ctx = ctx_with(20);
  const IdentityReport even = verify_bernoulli_sum_zero(8, ctx);
  CHECK(even.achieved);
  CHECK(even.abs_err == 0);
  CHECK_FALSE(verify_bernoulli_sum_zero(1, ctx).achieved);
}

TEST_CASE("odd zeta relation table") {
  const auto rows = zeta_relation_rows(4, 9);
  REQUIRE(rows.size() == 20);
  for (const auto& row : rows) {
    CHECK(row.N % 2 == 1);
    CHECK(row.low_arg == 2 * row.m + 1);
    CHECK(row.high_arg == 2 * static_cast<std::int64_t>(row.N) * row.m + 1);
    CHECK(row.degenerate == (row.N == 1 && row.m % 2 == 0));
  }
  auto find = [&](std::int64_t m, unsigned N) {
    for (const auto& row : rows)
      if (row.m == m && row.N == N) return std::pair{row.low_arg, row.high_arg};
    return std::pair<std::int64_t, std::int64_t>{0, 0};
  };
  CHECK(find(1, 3) == std::pair<std::int64_t, std::int64_t>{3, 7});
  CHECK(find(2, 9) == std::pair<std::int64_t, std::int64_t>{5, 37});
  CHECK(find(3, 1) == std::pair<std::int64_t, std::int64_t>{7, 7});
  CHECK(find(4, 7) == std::pair<std::int64_t, std::int64_t>{9, 57});
  CHECK(zeta_relation_rows(1, 1).size() == 1);
  CHECK(zeta_relation_rows(2, 4).size() == 4);
}

TEST_CASE("extended transform routes the logarithmic case") {
  const auto ctx = ctx_with(30);
  PrecisionScope scope(ctx);
  const IdentityReport plain = verify_kty_extended(3, 1, BigReal(1), ctx);
  CHECK(plain.id == IdentityId::KtyExtended);
  CHECK(plain.achieved);
  const IdentityReport routed = verify_kty_extended(3, 2, BigReal(1), ctx);
  CHECK(routed.id == IdentityId::EtaGen);
  CHECK(routed.achieved);
  CHECK(routed.params.count("routed_from"));
}

TEST_CASE("reduced target follows the term budget") {
  auto ctx = ctx_with(20);
  ctx.max_terms = 2000;
  PrecisionScope scope(ctx);
  const BigReal pi = pi_value();
  CHECK_THROWS_AS(verify_zeta_gen(5, 1, pi, pi, ctx), BudgetExceeded);
  ctx.allow_reduced_target = true;
  const IdentityReport r = verify_zeta_gen(5, 1, pi, pi, ctx);
  CHECK(r.target_digits < default_target_digits(ctx));
  CHECK(r.target_digits >= 1);
  CHECK_FALSE(r.notes.empty());
  for (const auto& [key, n] : r.term_counts) CHECK(n <= 2000);
}
