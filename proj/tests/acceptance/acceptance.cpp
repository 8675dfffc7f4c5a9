// Acceptance run: one PASS/FAIL line per criterion, with the measured
// digits and wall time. Exit status is the number of failing criteria.

#include "identities/identities.hpp"
#include "identities/registry.hpp"
#include "lambert/lambert.hpp"
#include "numerics/error.hpp"
#include "numerics/zeta.hpp"
#include "oracle/oracle.hpp"
#include "transforms/transforms.hpp"

#include "../unit/support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace lamzeta;
using lamzeta::testing::SplitMix;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Collects the sub-checks of one criterion.
class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)), start_(Clock::now()) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      failures_.push_back(what);
    }
  }

  // Agreement of a report, tracking the worst case.
  void digits(const IdentityReport& r, int need, const std::string& what) {
    worst_ = std::min(worst_, r.digits_agreed);
    expect(r.digits_agreed >= need, what + ": " + std::to_string(r.digits_agreed) + " < " + std::to_string(need) +
                                        " digits");
  }

  void record_digits(int d) { worst_ = std::min(worst_, d); }

  template <class F>
  void guard(const std::string& what, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }

  double elapsed() const { return seconds_since(start_); }

  bool finish(const std::string& extra = "") const {
    std::printf("%s  %-64s", ok_ ? "PASS" : "FAIL", name_.c_str());
    if (worst_ != INT32_MAX) std::printf("  min digits %3d", worst_);
    std::printf("  %7.2fs", elapsed());
    if (!extra.empty()) std::printf("  %s", extra.c_str());
    std::printf("\n");
    for (const auto& f : failures_) std::printf("      - %s\n", f.c_str());
    std::fflush(stdout);
    return ok_;
  }

 private:
  std::string name_;
  Clock::time_point start_;
  bool ok_ = true;
  int worst_ = INT32_MAX;
  std::vector<std::string> failures_;
};

PrecisionContext ctx_with(int digits) { return PrecisionContext::with_digits(digits); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

bool zeta_half() {
  Criterion c("1 zeta(1/2) formula, 50-digit context, >= 30 digits, < 5 s/pair");
  const auto ctx = ctx_with(50);
  double slowest = 0;
  // The first pair is given in full; the others have beta solved from alpha.
  for (const auto& params : std::vector<std::map<std::string, std::string>>{
           {{"alpha", "pi^3"}, {"beta", "4"}}, {{"alpha", "2pi^3"}}, {{"alpha", "pi^2"}}, {{"alpha", "pi/2"}}}) {
    const std::string what = "alpha=" + params.at("alpha");
    c.guard(what, [&] {
      const auto t = Clock::now();
      const IdentityReport r = run_identity(IdentityId::ZetaHalf, params, ctx);
      const double s = seconds_since(t);
      slowest = std::max(slowest, s);
      c.digits(r, 30, what);
      c.expect(s < 5.0, what + " took " + fmt("%.2f s", s));
    });
  }
  return c.finish("slowest pair " + fmt("%.2fs", slowest));
}

bool kty_grid() {
  Criterion c("2 extended transform grid N<=3, h in -2..3, 3 x values, >= 30 digits, < 2 min");
  const auto ctx = ctx_with(40);
  PrecisionScope scope(ctx);
  const BigReal pi = pi_value();
  int runs = 0;
  for (unsigned N = 1; N <= 3; ++N) {
    for (std::int64_t h = -2; h <= 3; ++h) {
      if (static_cast<std::int64_t>(N) - 2 * h == -1) continue;
      for (const BigReal& x : {BigReal(0.5), BigReal(1), BigReal(2 * pi)}) {
        const std::string what = "N=" + std::to_string(N) + " h=" + std::to_string(h) + " x=" + to_decimal(x, 6);
        c.guard(what, [&] {
          c.digits(verify_kty_extended(N, h, x, ctx), 30, what);
          ++runs;
        });
      }
    }
  }
  c.expect(c.elapsed() < 120.0, "grid took " + fmt("%.1f s", c.elapsed()));
  return c.finish(std::to_string(runs) + " points");
}

bool zeta_gen() {
  Criterion c("3 generalized odd zeta formula, >= 30 digits; N=5 >= 10 within budget");
  const auto ctx = ctx_with(40);
  PrecisionScope scope(ctx);
  const BigReal pi = pi_value();
  for (std::int64_t m : {1, -1, 2, -2, 3}) {
    c.guard("N=1 m=" + std::to_string(m), [&] { c.digits(verify_zeta_gen(1, m, pi, pi, ctx), 30, "N=1 m=" + std::to_string(m)); });
  }
  for (std::int64_t m : {1, -1}) {
    c.guard("N=3 m=" + std::to_string(m), [&] { c.digits(verify_zeta_gen(3, m, pi, pi, ctx), 30, "N=3 m=" + std::to_string(m)); });
  }
  for (unsigned N : {1u, 3u}) {
    const BigReal alpha = 2 * pi;
    const BigReal beta = constraint_for(IdentityId::ZetaGen, N).solve_beta(alpha);
    c.guard("asymmetric N=" + std::to_string(N),
            [&] { c.digits(verify_zeta_gen(N, 1, alpha, beta, ctx), 30, "N=" + std::to_string(N) + " alpha=2pi"); });
  }

  // N = 5: ten digits within the default budget.
  c.guard("N=5 m=1", [&] {
    const auto small = ctx_with(20);
    PrecisionScope s(small);
    const BigReal p = pi_value();
    c.digits(verify_zeta_gen(5, 1, p, p, small), 10, "N=5 m=1 at 20 digits");
  });

  // Budget negotiation: refusing a starved run names the digits the cap can
  // certify, and the reduced run reports that same number.
  c.guard("N=5 negotiation", [&] {
    auto tight = ctx_with(30);
    tight.max_terms = 20000;
    PrecisionScope s(tight);
    const BigReal p = pi_value();
    const Angle slowest{2, 5};
    int refused_at = -1;
    std::uint64_t required = 0;
    try {
      lambert_sum_rotated(Rational(-3), 5, p, slowest, tight);
    } catch (const BudgetExceeded& e) {
      refused_at = e.achievable_digits();
      required = e.required_terms();
    }
    c.expect(refused_at >= 0, "starved rotated sum was not refused");
    c.expect(required > tight.max_terms, "required terms not above the cap");
    tight.allow_reduced_target = true;
    const LambertResult reduced = lambert_sum_rotated(Rational(-3), 5, p, slowest, tight);
    c.expect(reduced.truncation.reduced, "reduced run not flagged");
    c.expect(reduced.truncation.n_max == tight.max_terms, "reduced run did not stop at the cap");
    c.expect(reduced.truncation.certified_digits == refused_at,
             "cap reports " + std::to_string(reduced.truncation.certified_digits) + " digits, refusal said " +
                 std::to_string(refused_at));
    // The certified tail is honest: twenty times more terms move the sum by
    // less than the bound claimed at the cap.
    auto roomier = tight;
    roomier.max_terms = 20 * tight.max_terms;
    const LambertResult longer = lambert_sum_rotated(Rational(-3), 5, p, slowest, roomier);
    c.expect(abs(longer.value - reduced.value) <= reduced.truncation.tail_bound,
             "tail bound at the cap is smaller than the observed change");
    const IdentityReport r = verify_zeta_gen(5, 1, p, p, tight);
    c.expect(r.target_digits <= reduced.truncation.certified_digits, "report target above the certified cap");
    c.expect(r.achieved, "reduced N=5 report not achieved at its own target");
  });
  return c.finish();
}

bool corollaries() {
  Criterion c("4 zeta(3)/zeta(7) and omega-rotated corollaries at alpha=beta=pi, >= 30 digits");
  const auto ctx = ctx_with(40);
  PrecisionScope scope(ctx);
  const BigReal pi = pi_value();
  c.guard("z3z7", [&] { c.digits(verify_cor_z3z7(pi, pi, ctx), 30, "zeta(3)/zeta(7)"); });
  c.guard("abpi", [&] { c.digits(verify_cor_abpi(pi, pi, ctx), 30, "omega-rotated"); });
  return c.finish();
}

bool eta() {
  Criterion c("5 eta transformation: N=1 two pairs >= 30 digits, N=3 >= 25 digits");
  const auto ctx = ctx_with(40);
  PrecisionScope scope(ctx);
  const BigReal pi = pi_value();
  for (const BigReal& alpha : {pi, BigReal(pi / 2)}) {
    const BigReal beta = pi * pi / alpha;
    c.guard("log-dedekind", [&] {
      c.digits(verify_log_dedekind(alpha, beta, ctx), 30, "log eta alpha=" + to_decimal(alpha, 6));
      c.digits(verify_eta_gen(1, alpha, beta, ctx), 30, "N=1 alpha=" + to_decimal(alpha, 6));
    });
  }
  c.guard("N=3", [&] {
    const auto ctx35 = ctx_with(35);
    PrecisionScope s(ctx35);
    const BigReal p = pi_value();
    c.digits(verify_eta_gen(3, p, p, ctx35), 25, "N=3 alpha=beta=pi");
  });
  return c.finish();
}

bool wigert() {
  Criterion c("6 Wigert-type formula N=2, m in {0,1,-1}, >= 25 digits; m=0 vs classical");
  const auto ctx = ctx_with(35);
  PrecisionScope scope(ctx);
  const BigReal pi = pi_value();
  const BigReal alpha = pi;
  const BigReal beta = constraint_for(IdentityId::WigertGen, 2).solve_beta(alpha);
  IdentityReport m0;
  for (std::int64_t m : {0, 1, -1}) {
    c.guard("m=" + std::to_string(m), [&] {
      IdentityReport r = verify_wigert_gen(2, m, alpha, beta, ctx);
      c.digits(r, 25, "m=" + std::to_string(m));
      if (m == 0) m0 = r;
    });
  }
  // m = 0: alpha^{1/3}(zeta(0)/2 + sum 1/(e^{4 n^2 alpha} - 1)), so the series
  // recovered from the right side must match the classical formula at x = 4 alpha.
  c.guard("classical", [&] {
    const IdentityReport classic = verify_wigert_classic(2, 4 * alpha, ctx);
    c.digits(classic, 25, "classical formula at x=4pi");
    const BigReal third = boost::multiprecision::cbrt(alpha);
    const BigReal from_gen = m0.rhs.re() / third + BigReal(1) / 4;
    const double agree = lamzeta::testing::agreement(from_gen, classic.rhs.re());
    c.record_digits(static_cast<int>(agree));
    c.expect(agree >= 25, "m=0 right side vs classical right side: " + fmt("%.1f", agree) + " digits");
  });
  return c.finish();
}

bool lerch() {
  Criterion c("7 zeta(3) + 2 sum n^-3/(e^{2 pi n}-1) - 7 pi^3/180 vanishes to >= 40 digits");
  const auto ctx = ctx_with(50);
  PrecisionScope scope(ctx);
  c.guard("lerch", [&] {
    const BigReal pi = pi_value();
    // 7/180 = -(bernoulli_sum at m=1) * 2^3 / 2, kept rational.
    const Rational coeff = -bernoulli_sum_zero(1) * 4;
    c.expect(coeff == Rational(7, 180), "pi^3 coefficient is not 7/180");
    const LambertResult s = lambert_sum(SeriesSpec{Rational(-3), Rational(1), BigComplex(2 * pi)}, ctx);
    const BigReal residual = detail::zeta(BigReal(3)) + 2 * s.value.re() - to_big(coeff) * pi * pi * pi;
    const double small = lamzeta::testing::smallness(residual);
    c.record_digits(static_cast<int>(small));
    c.expect(small >= 40, "residual " + to_decimal(residual, 5));
    c.digits(verify_lerch_gen(1, 1, ctx), 40, "general form N=1 m=1");
  });
  return c.finish();
}

bool bernoulli_zero() {
  Criterion c("8 Bernoulli sum is an exact rational zero for even m <= 20");
  for (std::int64_t m = 2; m <= 20; m += 2) {
    c.expect(bernoulli_sum_zero(m) == 0, "m=" + std::to_string(m) + " gives " + bernoulli_sum_zero(m).str());
  }
  return c.finish();
}

bool oracle() {
  Criterion c("9 contour oracle vs direct sum, >= 15 digits, < 60 s each");
  const auto ctx = ctx_with(20);
  struct Case {
    unsigned N;
    std::int64_t h;
    int x;
  };
  double slowest = 0;
  for (const Case k : {Case{1, 0, 1}, Case{1, 2, 2}, Case{2, 1, 2}, Case{3, 2, 1}}) {
    const std::string what = "N=" + std::to_string(k.N) + " h=" + std::to_string(k.h) + " x=" + std::to_string(k.x);
    c.guard(what, [&] {
      const auto t = Clock::now();
      const OracleComparison r = oracle_compare(k.N, k.h, BigReal(k.x), ctx);
      const double s = seconds_since(t);
      slowest = std::max(slowest, s);
      c.record_digits(r.digits_agreed);
      c.expect(r.digits_agreed >= 15, what + ": " + std::to_string(r.digits_agreed) + " digits");
      c.expect(s < 60.0, what + " took " + fmt("%.1f s", s));
    });
  }
  return c.finish("slowest " + fmt("%.2fs", slowest));
}

bool cn() {
  Criterion c("10 divisor-sum identity: corrected >= 25 digits, uncorrected off by > 1e-3");
  const auto ctx = ctx_with(35);
  PrecisionScope scope(ctx);
  const BigReal pi = pi_value();
  for (std::int64_t m : {1, 2}) {
    for (const BigReal& y : {BigReal(1), BigReal(2 * pi)}) {
      const std::string what = "m=" + std::to_string(m) + " y=" + to_decimal(y, 6);
      c.guard(what, [&] { c.digits(cn_corrected(m, y, ctx), 25, what); });
    }
  }
  std::string gap;
  c.guard("erroneous", [&] {
    const IdentityReport bad = cn_erroneous_demo(1, 2 * pi, ctx);
    gap = "uncorrected abs_err " + to_decimal(bad.abs_err, 4);
    c.expect(bad.abs_err > BigReal(1e-3), gap);
    c.expect(!bad.achieved, "uncorrected form reported as achieved");
  });
  return c.finish(gap);
}

bool properties() {
  Criterion c("11 property suites (kernel, f0, realness, N=1 reduction, relation table)");
  const auto ctx = ctx_with(30);
  PrecisionScope scope(ctx);
  const BigReal pi = pi_value();

  // Kernel identity, trigonometric against exponential form, 200 points.
  SplitMix rng(20260101);
  int worst = INT32_MAX;
  const double half_pi = M_PI / 2;
  for (int i = 0; i < 200; ++i) {
    const KernelPoint p{BigReal(rng.uniform(0.05, 30.0)), BigReal(rng.uniform(-half_pi + 0.01, half_pi - 0.01)),
                        BigReal(rng.uniform(-12.0, 12.0))};
    const BigReal trig = kernel_trig_form(p);
    const BigReal scale = boost::multiprecision::max(BigReal(1), boost::multiprecision::abs(trig));
    const BigReal diff = boost::multiprecision::abs(trig - kernel_exp_form(p)) / scale;
    const int d = diff == 0 ? ctx.working_digits() : static_cast<int>(std::floor(-log10_abs(diff)));
    worst = std::min(worst, d);
  }
  c.record_digits(std::min(worst, ctx.working_digits()));
  c.expect(worst >= ctx.working_digits() - 5, "kernel forms agree to only " + std::to_string(worst) + " digits");

  // f0 = 1/(e^{2A} - 1) with A = pi (2 pi n / x)^{1/N}.
  for (int i = 0; i < 50; ++i) {
    const BigReal x(rng.uniform(0.1, 10.0));
    const std::uint64_t n = static_cast<std::uint64_t>(rng.integer(1, 200));
    const unsigned N = static_cast<unsigned>(rng.integer(1, 6));
    const BigReal A = coeff_A(BigReal(n) / x, N, ctx);
    const BigReal expect = 1 / boost::multiprecision::expm1(2 * A);
    const double d = lamzeta::testing::agreement(kernel_f0(x, n, N, ctx), expect);
    if (d < ctx.working_digits() - 5) {
      c.expect(false, "f0 at x=" + to_decimal(x, 6) + " n=" + std::to_string(n) + " N=" + std::to_string(N));
    }
  }

  // Symmetrized sums come out real.
  const BigReal tiny = boost::multiprecision::pow(BigReal(10), -(ctx.working_digits() - 5));
  auto is_real = [&](const IdentityReport& r) {
    return abs(r.lhs.im()) <= tiny * (1 + abs(r.lhs)) && abs(r.rhs.im()) <= tiny * (1 + abs(r.rhs));
  };
  c.guard("realness", [&] {
    c.expect(is_real(verify_zeta_gen(3, 1, pi, pi, ctx)), "zeta-gen N=3 not real");
    c.expect(is_real(verify_zeta_gen(3, -1, pi, pi, ctx)), "zeta-gen N=3 m=-1 not real");
    c.expect(is_real(verify_eta_gen(3, pi, pi, ctx)), "eta N=3 not real");
    c.expect(is_real(verify_wigert_gen(2, 1, pi, pi, ctx)), "wigert N=2 not real");
    c.expect(is_real(verify_cor_z3z7(pi, pi, ctx)), "z3z7 not real");
    c.expect(is_real(verify_cor_abpi(pi, pi, ctx)), "omega-rotated not real");
    for (std::int64_t h : {-1, 0, 1, 3}) c.expect(is_real(verify_kty_extended(3, h, BigReal(1), ctx)), "kty N=3 not real");
  });

  // N = 1 of the generalized formula is the classical one, side by side.
  c.guard("reduction", [&] {
    for (std::int64_t m : {1, 2, 3, -1, -2}) {
      for (const BigReal& alpha : {pi, BigReal(3 * pi / 2)}) {
        const BigReal beta = pi * pi / alpha;
        const IdentityReport g = verify_zeta_gen(1, m, alpha, beta, ctx);
        const IdentityReport r = verify_ramanujan_odd(m, alpha, beta, ctx);
        const BigReal scale = boost::multiprecision::max(BigReal(1), abs(r.lhs));
        const double d = -log10_abs(abs(g.lhs - r.lhs) / scale + tiny * tiny);
        c.expect(d >= ctx.decimal_digits - 5 && g.achieved && r.achieved, "N=1 reduction at m=" + std::to_string(m));
      }
    }
  });

  // Relation table, m <= 4 and odd N <= 9.
  const auto rows = zeta_relation_rows(4, 9);
  bool table_ok = rows.size() == 20;
  for (const auto& row : rows) {
    table_ok = table_ok && row.low_arg == 2 * row.m + 1 &&
               row.high_arg == 2 * static_cast<std::int64_t>(row.N) * row.m + 1 && row.N % 2 == 1;
  }
  auto has = [&](std::int64_t m, unsigned N, std::int64_t lo, std::int64_t hi) {
    for (const auto& row : rows)
      if (row.m == m && row.N == N) return row.low_arg == lo && row.high_arg == hi;
    return false;
  };
  table_ok = table_ok && has(1, 3, 3, 7) && has(2, 9, 5, 37) && has(3, 1, 7, 7);
  c.expect(table_ok, "relation table rows differ");
  return c.finish();
}

}  // namespace

int main() {
  std::printf("acceptance run\n");
  const std::vector<std::function<bool()>> criteria = {zeta_half, kty_grid, zeta_gen, corollaries, eta,       wigert,
                                                       lerch,     bernoulli_zero, oracle, cn,     properties};
  int failed = 0;
  for (const auto& run : criteria) failed += run() ? 0 : 1;
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}
