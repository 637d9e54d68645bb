#include <doctest.h>

#include <vector>

#include "support/reference.hpp"
#include "zetaseries/errors.hpp"
#include "zetaseries/oracles.hpp"
#include "zetaseries/special_numbers.hpp"

using namespace zetaseries;
using zetaseries::testing::close_to_digits;

namespace {

// Akiyama–Tanigawa; yields the B_1 = +1/2 convention.
std::vector<Rational> akiyama_tanigawa(unsigned count) {
  std::vector<Rational> row(count + 1);
  std::vector<Rational> out;
  for (unsigned m = 0; m <= count; ++m) {
    row[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
      row[j - 1].canonicalize();
    }
    out.push_back(row[0]);
  }
  return out;
}

// sech z = 1 / cosh z as an exact power series; E_n = n! [z^n] sech z.
std::vector<BigInt> sech_euler_numbers(unsigned count) {
  std::vector<Rational> cosh_coeff(count + 1, Rational(0));
  Rational inverse_factorial(1);
  for (unsigned n = 0; n <= count; ++n) {
    if (n > 0) inverse_factorial /= n;
    if (n % 2 == 0) cosh_coeff[n] = inverse_factorial;
  }
  std::vector<Rational> sech(count + 1, Rational(0));
  sech[0] = 1;
  for (unsigned n = 1; n <= count; ++n) {
    Rational acc(0);
    for (unsigned j = 1; j <= n; ++j) acc += cosh_coeff[j] * sech[n - j];
    sech[n] = -acc;
  }
  std::vector<BigInt> out;
  Rational factorial(1);
  for (unsigned n = 0; n <= count; ++n) {
    if (n > 0) factorial *= n;
    Rational e = sech[n] * factorial;
    e.canonicalize();
    REQUIRE(e.get_den() == 1);
    out.push_back(e.get_num());
  }
  return out;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (unsigned n = 3; n < 80; n += 2) {
    CHECK(bernoulli(n) == 0);
  }
  const auto reference = akiyama_tanigawa(60);
  for (unsigned n = 0; n <= 60; ++n) {
    if (n == 1) continue;
    CHECK(bernoulli(n) == reference[n]);
  }
}

TEST_CASE("bernoulli signs alternate and the recurrence is exact") {
  for (unsigned k = 1; k <= 40; ++k) {
    const int expected = (k % 2 == 1) ? 1 : -1;
    CHECK(sgn(bernoulli(2 * k)) == expected);
  }
  for (unsigned n = 1; n <= 60; ++n) {
    CHECK(bernoulli_recurrence_residual(n) == 0);
  }
}

TEST_CASE("euler numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(1) == 0);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(8) == 1385);
  const auto reference = sech_euler_numbers(40);
  for (unsigned n = 0; n <= 40; ++n) {
    CHECK(euler_number(n) == reference[n]);
  }
  for (unsigned n = 1; n <= 20; ++n) {
    BigInt sum(0);
    for (unsigned j = 0; j <= n; ++j) sum += binomial(2 * n, 2 * j) * euler_number(2 * j);
    CHECK(sum == 0);
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(3) == Rational(11, 6));
  CHECK(harmonic(5) == Rational(137, 60));
  Rational direct(0);
  for (unsigned k = 1; k <= 50; ++k) direct += Rational(1, k);
  CHECK(harmonic(50) == direct);
  CHECK_THROWS_AS(harmonic(0), InvalidDomain);
}

TEST_CASE("harmonic-binomial identity") {
  CHECK(harmonic_binomial_identity_check(1));
  CHECK(harmonic_binomial_identity_check(2));
  CHECK(harmonic_binomial_identity_check(7));
  for (unsigned n = 1; n <= 20; ++n) {
    CHECK(harmonic_binomial_identity_check(n));
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("even zeta values") {
  const EvalContext ctx{Precision(30)};
  const Real pi = testing::machin_pi(ctx);
  CHECK(close_to_digits(zeta_even(1, ctx), pi * pi / 6, 38));
  CHECK(zeta_even(1, ctx).to_fixed(15) == "1.644934066848226");
  CHECK(close_to_digits(zeta_even(2, ctx), pow(pi, 4UL) / 90, 38));
  CHECK(zeta_even(30, EvalContext{Precision(20)}).to_fixed(21) == "1.000000000000000000867");
}

TEST_CASE("even zeta agrees with the direct-sum oracle") {
  const EvalContext ctx{Precision(30)};
  for (unsigned n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(close_to_digits(zeta_even(n, ctx), zeta_direct(2 * n, ctx), 37));
  }
  // Both routes across the switch-over index (the direct sum is only
  // practical once a few thousand terms suffice).
  for (unsigned n = 5; n <= 25; ++n) {
    CAPTURE(n);
    CHECK(close_to_digits(zeta_even_closed_form(n, ctx), zeta_even_direct_sum(n, ctx), 38));
  }
  CHECK_THROWS_AS(zeta_even(0, ctx), InvalidDomain);
}

TEST_CASE("even zeta decreases to one") {
  const EvalContext ctx{Precision(30)};
  Real previous = zeta_even(1, ctx);
  for (unsigned n = 2; n <= 30; ++n) {
    const Real current = zeta_even(n, ctx);
    CHECK(current > 1L);
    CHECK(current < previous);
    previous = current;
  }
}

TEST_CASE("odd beta values") {
  const EvalContext ctx{Precision(30)};
  const Real pi = testing::machin_pi(ctx);
  CHECK(close_to_digits(beta_odd(0, ctx), pi / 4, 38));
  CHECK(close_to_digits(beta_odd(1, ctx), pow(pi, 3UL) / 32, 38));
  CHECK(close_to_digits(beta_odd(2, ctx), pow(pi, 5UL) * 5 / 1536, 38));
  for (unsigned n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(close_to_digits(beta_odd(n, ctx), beta_direct(2 * n + 1, ctx), 37));
  }
}
