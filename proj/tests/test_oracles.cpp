#include <doctest.h>

#include "support/reference.hpp"
#include "zetaseries/errors.hpp"
#include "zetaseries/oracles.hpp"

using namespace zetaseries;
using zetaseries::testing::close_to_digits;

TEST_CASE("direct zeta sums") {
  const EvalContext ctx{Precision(30)};
  const Real pi = testing::machin_pi(ctx);
  CHECK(close_to_digits(zeta_direct(2, ctx), pi * pi / 6, 38));
  CHECK(close_to_digits(zeta_direct(4, ctx), pow(pi, 4UL) / 90, 38));
  CHECK(zeta_direct(3, ctx).to_fixed(16) == "1.2020569031595943");
  CHECK_THROWS_AS(zeta_direct(1, ctx), InvalidDomain);
  CHECK_THROWS_AS(zeta_direct(0, ctx), InvalidDomain);
}

TEST_CASE("direct zeta error bound covers the true error") {
  const EvalContext ctx{Precision(30)};
  const Real pi = testing::machin_pi(ctx);
  for (std::size_t terms : {5u, 20u, 80u}) {
    EulerMaclaurinOptions options;
    options.direct_terms = terms;
    options.correction_terms = 3;
    const auto estimate = zeta_direct_detailed(2, ctx, options);
    CAPTURE(terms);
    CHECK(abs(estimate.value - pi * pi / 6) <= estimate.error_bound);
  }
}

TEST_CASE("four corrections over ten thousand terms pass thirty digits") {
  const EvalContext ctx{Precision(30)};
  EulerMaclaurinOptions options;
  options.direct_terms = 10'000;
  options.correction_terms = 4;
  for (unsigned s = 2; s <= 5; ++s) {
    CAPTURE(s);
    const auto fixed = zeta_direct_detailed(s, ctx, options);
    CHECK(close_to_digits(fixed.value, zeta_direct(s, ctx), 31));
    CHECK(fixed.achieved_digits() > 30);
  }
}

TEST_CASE("direct zeta is stable under doubling the direct terms") {
  const EvalContext ctx{Precision(30)};
  for (unsigned s : {2u, 3u, 7u}) {
    for (std::size_t n : {30u, 100u}) {
      EulerMaclaurinOptions single;
      single.direct_terms = n;
      EulerMaclaurinOptions doubled;
      doubled.direct_terms = 2 * n;
      const auto a = zeta_direct_detailed(s, ctx, single);
      const auto b = zeta_direct_detailed(s, ctx, doubled);
      CAPTURE(s);
      CAPTURE(n);
      CHECK(abs(a.value - b.value) < a.error_bound);
      CHECK(abs(a.value - b.value) < ctx.output_resolution());
    }
  }
}

TEST_CASE("hurwitz sums") {
  const EvalContext ctx{Precision(30)};
  // zeta(s, 1) = zeta(s); zeta(s, 1/2) = (2^s - 1) zeta(s).
  CHECK(close_to_digits(hurwitz_direct(3, Rational(1), ctx).value, zeta_direct(3, ctx), 37));
  CHECK(close_to_digits(hurwitz_direct(3, Rational(1, 2), ctx).value, zeta_direct(3, ctx) * 7, 37));
  // zeta(2, 1/4) = pi^2 + 8 G
  CHECK(close_to_digits(hurwitz_direct(2, Rational(1, 4), ctx).value,
                        ctx.pi() * ctx.pi() + beta_direct(2, ctx) * 8, 37));
  CHECK_THROWS_AS(hurwitz_direct(1, Rational(1, 2), ctx), InvalidDomain);
  CHECK_THROWS_AS(hurwitz_direct(2, Rational(0), ctx), InvalidDomain);
}

TEST_CASE("accelerated beta sums") {
  const EvalContext ctx{Precision(30)};
  const Real pi = testing::machin_pi(ctx);
  CHECK(close_to_digits(beta_direct(1, ctx), pi / 4, 38));
  CHECK(beta_direct(2, ctx).to_fixed(16) == "0.9159655941772190");
  CHECK(close_to_digits(beta_direct(3, ctx), pow(pi, 3UL) / 32, 38));
  CHECK(beta_direct(4, ctx).to_fixed(20) == "0.98894455174110533611");
  CHECK_THROWS_AS(beta_direct(0, ctx), InvalidDomain);
}

TEST_CASE("beta acceleration bound and doubling") {
  const EvalContext ctx{Precision(30)};
  const Real pi = testing::machin_pi(ctx);
  for (std::size_t terms : {5u, 10u, 20u}) {
    const auto a = beta_direct_detailed(1, ctx, terms);
    const auto b = beta_direct_detailed(1, ctx, 2 * terms);
    CAPTURE(terms);
    CHECK(abs(a.value - pi / 4) <= a.error_bound);
    CHECK(abs(a.value - b.value) <= a.error_bound);
  }
  const auto g = beta_direct_detailed(2, ctx);
  CHECK(g.achieved_digits() >= 39);
}

TEST_CASE("capped sine sums") {
  const EvalContext ctx{Precision(30)};
  const Real pi = ctx.pi();
  const auto zero = clausen_direct(1, pi, ctx, 10'000);
  CHECK(abs(zero.value) <= zero.error_bound);
  CHECK(abs(zero.value) < power_of_ten(-30, ctx.bits()));

  const auto beta4 = clausen_direct(2, pi / 2, ctx, 20'000);
  CHECK(abs(beta4.value - beta_direct(4, ctx)) <= beta4.error_bound);
  CHECK(beta4.achieved_digits() > 12);

  const auto cl2 = clausen_direct(1, pi / 3, ctx, 20'000);
  CHECK(cl2.terms == 20'000);
  CHECK(abs(cl2.value - ctx.parse("1.0149416064096536250")) <= cl2.error_bound);
  CHECK(cl2.achieved_digits() > 4);
  CHECK(cl2.achieved_digits() < 5);
  CHECK_THROWS_AS(clausen_direct(0, pi, ctx), InvalidDomain);
}

TEST_CASE("periodic regrouping matches the capped sine sum") {
  const EvalContext ctx{Precision(30)};
  for (const Rational& turns : {Rational(1, 6), Rational(1, 8), Rational(2, 5), Rational(-1, 3)}) {
    for (unsigned m = 1; m <= 3; ++m) {
      CAPTURE(m);
      const Real theta = ctx.pi() * 2 * ctx.real(turns);
      const auto direct = clausen_direct(m, theta, ctx, 5'000);
      const auto grouped = clausen_direct_turns(m, turns, ctx);
      CHECK(abs(direct.value - grouped.value) <= direct.error_bound + grouped.error_bound);
      CHECK(grouped.achieved_digits() > 38);
    }
  }
  CHECK(abs(clausen_direct_turns(3, Rational(1, 2), ctx).value).is_zero());
  CHECK(abs(clausen_direct_turns(2, Rational(1), ctx).value).is_zero());
  CHECK(close_to_digits(clausen_direct_turns(2, Rational(1, 4), ctx).value, beta_direct(4, ctx), 38));
  CHECK_THROWS_AS(clausen_direct_turns(1, Rational(1, 2'000'000), ctx), InvalidDomain);
}

TEST_CASE("Apery series") {
  const EvalContext ctx{Precision(20)};
  CHECK(apery_series(ctx, 1).value == ctx.real(5) / 4);
  const auto full = apery_series(ctx, 10'000);
  CHECK(close_to_digits(full.value, zeta_direct(3, ctx), 18));
  CHECK(full.status == SeriesStatus::converged);
  CHECK(full.terms_used < 60);
  CHECK_THROWS_AS(apery_series(ctx, 0), InvalidDomain);
}

TEST_CASE("Ramanujan series for Catalan's constant") {
  const EvalContext ctx{Precision(20)};
  const Real head = ctx.pi() / 8 * log(sqrt(ctx.real(3)) + 2);
  CHECK(close_to_digits(ramanujan_catalan(ctx, 1).value, head + ctx.real(3) / 8, 28));
  const auto full = ramanujan_catalan(ctx, 10'000);
  CHECK(close_to_digits(full.value, beta_direct(2, ctx), 18));
  CHECK(full.terms_used < 70);
  CHECK_THROWS_AS(ramanujan_catalan(ctx, 0), InvalidDomain);
}

TEST_CASE("naive zeta partial sums") {
  const EvalContext ctx{Precision(20)};
  const auto trace = naive_zeta_partial_sums(3, ctx, 10'000);
  CHECK(trace.sums.size() == 10'000);
  CHECK(trace.sums[0] == 1L);
  CHECK(trace.sums[1] == ctx.real(9) / 8);
  // Tail of sum 1/k^3 beyond 10^4 is about 5e-9.
  const Real gap = zeta_direct(3, ctx) - trace.sums.back();
  CHECK(gap > ctx.parse("4.9e-9"));
  CHECK(gap < ctx.parse("5.1e-9"));
}

TEST_CASE("Kolbig polygamma identity") {
  const EvalContext ctx{Precision(20)};
  for (unsigned n = 2; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(close_to_digits(kolbig_beta(n, ctx), beta_direct(2 * n, ctx), 12));
    CHECK(close_to_digits(kolbig_beta(n, ctx), beta_direct(2 * n, ctx), 27));
  }
  const auto g = kolbig_beta_detailed(1, ctx);
  CHECK(abs(g.value - beta_direct(2, ctx)) <= g.error_bound + beta_direct_detailed(2, ctx).error_bound);
  CHECK_THROWS_AS(kolbig_beta(0, ctx), InvalidDomain);
}

TEST_CASE("cross-oracle agreement at twenty digits") {
  const EvalContext ctx{Precision(20)};
  CHECK(close_to_digits(apery_series(ctx, 1000).value, zeta_direct(3, ctx), 12));
  CHECK(close_to_digits(ramanujan_catalan(ctx, 1000).value, beta_direct(2, ctx), 12));
  for (unsigned n = 2; n <= 4; ++n) {
    CHECK(close_to_digits(kolbig_beta(n, ctx), beta_direct(2 * n, ctx), 12));
  }
}
